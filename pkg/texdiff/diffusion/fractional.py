"""Nonlocal anisotropic diffusion : a Perona-Malik diffusivity driven by a
fractional order gradient, evaluated spectrally with periodic boundaries"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np
import numpy.typing as npt
from scipy import fft

from texdiff.errors import ParameterError
from texdiff.image import FloatArray, Image

from .params import DiffusionParams
from .perona_malik import edge_stopping
from .stencil import (
    Directional,
    edge_average,
    finite_image,
    flux_step,
    gradient_magnitude,
    neighbour_differences,
)


def frequency_norms(shape: Tuple[int, int]) -> FloatArray:
    """|k| for every integer frequency k = (k1, k2) of the DFT grid, laid out
    in numpy's fft order, ki in [-floor(n/2), ceil(n/2) - 1]"""
    rows, columns = shape
    k1 = fft.fftfreq(rows, d=1 / rows)
    k2 = fft.fftfreq(columns, d=1 / columns)
    norms: FloatArray = np.hypot(k1[:, np.newaxis], k2[np.newaxis, :])
    return norms


@dataclass(frozen=True, eq=False)
class SpectralMultiplier:
    """m_k = 2π max(|k|, 1)^(-ε) over the frequency grid of a given shape.
    Clamping |k| at 1 removes the singularity at the zero frequency"""

    epsilon: float
    multipliers: FloatArray

    @classmethod
    def for_shape(cls, shape: Tuple[int, int], epsilon: float) -> SpectralMultiplier:
        if not 0 <= epsilon < 1:
            raise ParameterError(f"epsilon must be in [0, 1), got {epsilon}")
        return _cached_multiplier(shape, epsilon)

    def apply_complex(self, field: FloatArray) -> npt.NDArray[np.complex128]:
        if field.shape != self.multipliers.shape:
            raise ValueError(
                f"Field of shape {field.shape} does not match the multiplier "
                f"shape {self.multipliers.shape}"
            )
        result: npt.NDArray[np.complex128] = fft.ifft2(
            self.multipliers * fft.fft2(field)
        )
        return result

    def apply(self, field: FloatArray) -> FloatArray:
        """The real part of F⁻¹(m F(field))"""
        real: FloatArray = self.apply_complex(field).real
        return real


@lru_cache(maxsize=32)
def _cached_multiplier(shape: Tuple[int, int], epsilon: float) -> SpectralMultiplier:
    norms = frequency_norms(shape)
    multipliers = 2 * math.pi * np.maximum(norms, 1.0) ** (-epsilon)
    multipliers.setflags(write=False)
    return SpectralMultiplier(epsilon=epsilon, multipliers=multipliers)


def fractional_gradient_magnitude(image: Image, epsilon: float) -> Image:
    """|∇^(1-ε) I| = F⁻¹(diag[2π|k|^(-ε)] F(|∇I|)). The 2π factor is kept
    as is, it rescales the result uniformly and κ can absorb it"""
    multiplier = SpectralMultiplier.for_shape(image.shape, epsilon)
    return Image(multiplier.apply(gradient_magnitude(image).data))


def nl_diffusivity(
    image: Image, params: DiffusionParams, differences: Directional, fractional: bool
) -> Directional:
    if not fractional:
        # ε = 0 without the spectral operator : the edge detector is the plain
        # directional difference, exactly as in Perona-Malik
        return differences.map(lambda d: edge_stopping(np.abs(d), params))
    edge_field = fractional_gradient_magnitude(image, params.epsilon)
    return edge_average(edge_stopping(edge_field.data, params))


def nl_step(image: Image, params: DiffusionParams, fractional: bool = True) -> Image:
    """One explicit step of the nonlocal diffusion. The per-pixel diffusivity
    g(|∇^(1-ε) I|) is averaged over the two endpoints of each edge.

    The spectral field is recomputed from the current image at every step.
    fractional=False bypasses the spectral operator, which reduces the model
    to Perona-Malik"""
    differences = neighbour_differences(image.data)
    diffusivity = nl_diffusivity(image, params, differences, fractional)
    result = flux_step(image.data, differences, diffusivity, params.dt)
    return finite_image(result, "Nonlocal")
