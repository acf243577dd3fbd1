"""Perona-Malik anisotropic diffusion and its forward-backward regularization"""

import numpy as np

from texdiff.image import FloatArray, Image

from .params import DiffusionParams, EdgeStopping
from .stencil import finite_image, flux_step, neighbour_differences


def rational_g(s: FloatArray, kappa: float) -> FloatArray:
    """g(s) = 1 / (1 + (s/κ)²)"""
    g: FloatArray = 1 / (1 + (s / kappa) ** 2)
    return g


def exponential_g(s: FloatArray, kappa: float) -> FloatArray:
    """g(s) = exp(-(s/κ)²), the other edge-stopping function Perona and Malik
    proposed"""
    g: FloatArray = np.exp(-((s / kappa) ** 2))
    return g


EDGE_STOPPING_FUNCTIONS = {
    EdgeStopping.RATIONAL: rational_g,
    EdgeStopping.EXPONENTIAL: exponential_g,
}


def edge_stopping(s: FloatArray, params: DiffusionParams) -> FloatArray:
    return EDGE_STOPPING_FUNCTIONS[params.edge_stopping](s, params.kappa)


def pm_step(image: Image, params: DiffusionParams) -> Image:
    differences = neighbour_differences(image.data)
    diffusivity = differences.map(lambda d: edge_stopping(np.abs(d), params))
    result = flux_step(image.data, differences, diffusivity, params.dt)
    return finite_image(result, "Perona-Malik")


def fbr_diffusivity(s: FloatArray, params: DiffusionParams) -> FloatArray:
    """c(s) = g(s) + δ max(s, η)^(p-2), capped so the explicit step keeps the
    extremum principle"""
    regularization = params.delta * np.maximum(s, params.grad_floor) ** (params.p - 2)
    c: FloatArray = np.minimum(
        edge_stopping(s, params) + regularization, params.max_diffusivity
    )
    return c


def fbr_step(image: Image, params: DiffusionParams) -> Image:
    differences = neighbour_differences(image.data)
    diffusivity = differences.map(lambda d: fbr_diffusivity(np.abs(d), params))
    result = flux_step(image.data, differences, diffusivity, params.dt)
    return finite_image(result, "Forward-backward regularized")
