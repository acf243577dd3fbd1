"""LBP histogram Fourier features.

Uniform patterns with n ones (1 <= n <= 7) form an orbit of P rotations. A
rotation of the image cyclically shifts the histogram along each orbit, so the
magnitudes of the DFT of each orbit row are rotation invariant"""

import numpy as np
from scipy import fft

from texdiff.image import FloatArray, IntArray

from .lbp import code_histogram
from .names import Descriptor
from .neighborhood import P, QuantizedImage, is_uniform, lbp_codes, rotate_code
from .vector import FeatureVector

ALL_ZEROS = 0
ALL_ONES = 2 ** P - 1

# ORBITS[n - 1, r] is the code with n contiguous ones starting at neighbour r
ORBITS: IntArray = np.array(
    [[rotate_code((1 << n) - 1, r) for r in range(P)] for n in range(1, P)],
    dtype=np.int64,
)

NON_UNIFORM: IntArray = np.array(
    [c for c in range(2 ** P) if not is_uniform(c)], dtype=np.int64
)

# conjugate symmetry makes u > P / 2 redundant
MAGNITUDES_PER_ROW = P // 2 + 1
LENGTH = (P - 1) * MAGNITUDES_PER_ROW + 3


def lbphf_from_histogram(histogram: FloatArray) -> FloatArray:
    """38 features from a full 256-bin LBP code histogram"""
    rows = histogram[ORBITS]
    magnitudes = np.abs(fft.fft(rows, axis=1))[:, :MAGNITUDES_PER_ROW]
    return np.concatenate(
        [
            magnitudes.ravel(),
            [
                histogram[ALL_ZEROS],
                histogram[ALL_ONES],
                histogram[NON_UNIFORM].sum(),
            ],
        ]
    )


def lbphf_from_codes(codes: IntArray) -> FeatureVector:
    values = lbphf_from_histogram(code_histogram(codes))
    return FeatureVector(values, Descriptor.LBPHF, blocks=(LENGTH,))


def lbphf(image: QuantizedImage) -> FeatureVector:
    return lbphf_from_codes(lbp_codes(image))
