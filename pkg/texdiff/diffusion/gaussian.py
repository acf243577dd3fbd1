"""Linear (isotropic) diffusion : convolution with a Gaussian kernel, which
solves the heat equation up to time t = sigma^2"""

import math

import numpy as np
from scipy import ndimage

from texdiff.errors import ParameterError
from texdiff.image import FloatArray, Image


def gaussian_density(x: FloatArray, y: FloatArray, sigma: float) -> FloatArray:
    """G(x, y) = exp(-(x² + y²) / 2σ²) / 2πσ², not normalized over the grid"""
    density: FloatArray = np.exp(-(x ** 2 + y ** 2) / (2 * sigma ** 2)) / (
        2 * math.pi * sigma ** 2
    )
    return density


def kernel_radius(sigma: float) -> int:
    return math.ceil(3 * sigma)


def gaussian_kernel_1d(sigma: float) -> FloatArray:
    if not sigma > 0:
        raise ParameterError(f"sigma must be positive, got {sigma}")
    radius = kernel_radius(sigma)
    x = np.arange(-radius, radius + 1, dtype=np.float64)
    weights = np.exp(-(x ** 2) / (2 * sigma ** 2))
    kernel: FloatArray = weights / weights.sum()
    return kernel


def gaussian_kernel(sigma: float, normalized: bool = True) -> FloatArray:
    """Discretized 2D kernel over [-ceil(3σ), ceil(3σ)]²"""
    if not sigma > 0:
        raise ParameterError(f"sigma must be positive, got {sigma}")
    if normalized:
        k = gaussian_kernel_1d(sigma)
        kernel: FloatArray = np.outer(k, k)
        return kernel
    radius = kernel_radius(sigma)
    x = np.arange(-radius, radius + 1, dtype=np.float64)
    xx, yy = np.meshgrid(x, x)
    return gaussian_density(xx, yy, sigma)


def gaussian_blur(image: Image, sigma: float) -> Image:
    """Convolution with the mass-normalized kernel, borders replicate the edge
    pixels. The two separable pass orders are averaged so that blurring
    commutes exactly with transposition"""
    k = gaussian_kernel_1d(sigma)
    data = image.data
    if np.ptp(data) == 0:
        return image
    rows_first = ndimage.correlate1d(
        ndimage.correlate1d(data, k, axis=0, mode="nearest"), k, axis=1, mode="nearest"
    )
    columns_first = ndimage.correlate1d(
        ndimage.correlate1d(data, k, axis=1, mode="nearest"), k, axis=0, mode="nearest"
    )
    return Image((rows_first + columns_first) / 2)


def heat_equation_time(sigma: float) -> float:
    return sigma ** 2
