"""Center-symmetric LBP : each pixel gets a 4-bit code from the differences
between opposite neighbours of its ring. Codes are histogrammed over a 4x4
grid of cells"""

from typing import Iterator

import numpy as np
from scipy import ndimage

from texdiff.errors import ParameterError, ShapeError
from texdiff.image import FloatArray, Image, IntArray, normalize

from .names import Descriptor
from .neighborhood import P, pack_bits, ring_neighbors
from .vector import FeatureVector

DEFAULT_T = 0.01
GRID = 4
PAIRS = P // 2
BINS_PER_CELL = 2 ** PAIRS


def cslbp_codes(data: FloatArray, T: float = DEFAULT_T) -> IntArray:
    """Codes in [0, 15], bit i is set iff n_i - n_(i+4) > T"""
    if T < 0:
        raise ParameterError(f"CSLBP threshold can't be negative, got {T}")
    ring = ring_neighbors(data)
    return pack_bits(ring[:PAIRS] - ring[PAIRS:] > T)


def iter_cells(codes: IntArray) -> Iterator[IntArray]:
    """Row-major cells of a GRID x GRID partition, cell sizes differ by at
    most one pixel along each axis"""
    for band in np.array_split(codes, GRID, axis=0):
        yield from np.array_split(band, GRID, axis=1)


def median_prefilter(image: Image) -> Image:
    return Image(ndimage.median_filter(image.data, size=3, mode="nearest"))


def cslbp(image: Image, T: float = DEFAULT_T, median: bool = False) -> FeatureVector:
    if image.height < GRID or image.width < GRID:
        raise ShapeError(
            f"CSLBP needs at least {GRID}x{GRID} pixels, got "
            f"{image.width}x{image.height}"
        )
    if median:
        image = median_prefilter(image)
    codes = cslbp_codes(normalize(image).data, T)
    histogram = np.concatenate(
        [
            np.bincount(cell.ravel(), minlength=BINS_PER_CELL)
            for cell in iter_cells(codes)
        ]
    ).astype(np.float64)
    return FeatureVector(
        histogram, Descriptor.CSLBP, blocks=(GRID * GRID * BINS_PER_CELL,)
    )
