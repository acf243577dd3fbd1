"""LBP variance : the riu2 histogram where each pixel votes with the variance
of its ring instead of 1"""

import numpy as np

from texdiff.image import FloatArray

from .names import Descriptor
from .neighborhood import P, RIU2_TABLE, QuantizedImage, lbp_codes, ring_neighbors
from .vector import FeatureVector

BINS = P + 2


def ring_variance(image: QuantizedImage) -> FloatArray:
    """Population variance of the 8 ring values of every pixel"""
    ring = ring_neighbors(image.levels).astype(np.float64)
    variance: FloatArray = ring.var(axis=0)
    return variance


def lbpv(image: QuantizedImage) -> FeatureVector:
    riu2 = RIU2_TABLE[lbp_codes(image)]
    histogram = np.bincount(
        riu2.ravel(), weights=ring_variance(image).ravel(), minlength=BINS
    )
    return FeatureVector(histogram, Descriptor.LBPV, blocks=(BINS,))
