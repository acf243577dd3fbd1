"""Explicit 4-neighbour finite difference machinery shared by the nonlinear
diffusion methods. Borders replicate the edge pixels, so no flux ever crosses
the image boundary"""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from texdiff.errors import NumericalError, ShapeError
from texdiff.image import FloatArray, Image


@dataclass(frozen=True)
class Directional:
    """One array per cardinal direction"""

    north: FloatArray
    south: FloatArray
    east: FloatArray
    west: FloatArray

    def map(self, f: Callable[[FloatArray], FloatArray]) -> "Directional":
        return Directional(f(self.north), f(self.south), f(self.east), f(self.west))


def neighbour_differences(data: FloatArray) -> Directional:
    """I(neighbour) - I(center) for each direction, zero across the border"""
    padded = np.pad(data, 1, mode="edge")
    return Directional(
        north=padded[:-2, 1:-1] - data,
        south=padded[2:, 1:-1] - data,
        east=padded[1:-1, 2:] - data,
        west=padded[1:-1, :-2] - data,
    )


def edge_average(field: FloatArray) -> Directional:
    """Value of a per-pixel field on each of the 4 edges around a pixel,
    taken as the mean of the edge's two endpoints"""
    padded = np.pad(field, 1, mode="edge")
    return Directional(
        north=(field + padded[:-2, 1:-1]) / 2,
        south=(field + padded[2:, 1:-1]) / 2,
        east=(field + padded[1:-1, 2:]) / 2,
        west=(field + padded[1:-1, :-2]) / 2,
    )


def flux_step(
    data: FloatArray, differences: Directional, diffusivity: Directional, dt: float
) -> FloatArray:
    """I + dt * sum_d c_d * grad_d I"""
    flux = (
        diffusivity.north * differences.north
        + diffusivity.south * differences.south
        + diffusivity.east * differences.east
        + diffusivity.west * differences.west
    )
    result: FloatArray = data + dt * flux
    return result


def gradient_magnitude(image: Image) -> Image:
    """|grad I| from central differences, borders replicate the edge pixels"""
    if image.height < 2 or image.width < 2:
        raise ShapeError(
            f"Gradients need an image of at least 2x2 pixels, got "
            f"{image.width}x{image.height}"
        )
    padded = np.pad(image.data, 1, mode="edge")
    ix = (padded[1:-1, 2:] - padded[1:-1, :-2]) / 2
    iy = (padded[2:, 1:-1] - padded[:-2, 1:-1]) / 2
    return Image(np.sqrt(ix ** 2 + iy ** 2))


def total_variation(image: Image) -> float:
    """Sum of |I(q) - I(p)| over every horizontal and vertical edge"""
    data = image.data
    return float(
        np.abs(np.diff(data, axis=0)).sum() + np.abs(np.diff(data, axis=1)).sum()
    )


def finite_image(data: FloatArray, method: str) -> Image:
    if not np.all(np.isfinite(data)):
        raise NumericalError(f"{method} step produced non-finite values")
    return Image(data)
