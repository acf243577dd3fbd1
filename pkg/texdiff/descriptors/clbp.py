"""Completed LBP : concatenated histograms of the sign (CLBP_S), magnitude
(CLBP_M) and center (CLBP_C) components of the local differences"""

from dataclasses import dataclass

import numpy as np

from texdiff.image import IntArray

from .lbp import code_histogram
from .names import Descriptor
from .neighborhood import (
    CODE_COUNT,
    QuantizedImage,
    pack_bits,
    ring_neighbors,
    sign_bits,
)
from .vector import FeatureVector


@dataclass(frozen=True)
class CLBPCodes:
    sign: IntArray
    magnitude: IntArray
    center: IntArray


def clbp_codes(image: QuantizedImage) -> CLBPCodes:
    levels = image.levels
    # |LSDMT_p| = |g_c - g_p|
    magnitudes = np.abs(levels - ring_neighbors(levels))
    # bit p is set iff |d_p| >= c with c the mean of all |d_p| over the image,
    # compared in integers as |d_p| * count >= sum
    magnitude_bits = magnitudes * magnitudes.size >= magnitudes.sum()
    center = (levels * levels.size >= levels.sum()).astype(np.int64)
    return CLBPCodes(
        sign=pack_bits(sign_bits(levels)),
        magnitude=pack_bits(magnitude_bits),
        center=center,
    )


def clbp(image: QuantizedImage) -> FeatureVector:
    codes = clbp_codes(image)
    histogram = np.concatenate(
        [
            code_histogram(codes.sign),
            code_histogram(codes.magnitude),
            code_histogram(codes.center, bins=2),
        ]
    )
    return FeatureVector(
        histogram, Descriptor.CLBP, blocks=(CODE_COUNT, CODE_COUNT, 2)
    )
