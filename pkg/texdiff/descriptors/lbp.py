"""Local binary pattern : 256-bin histogram of the 8-bit codes"""

import numpy as np

from .names import Descriptor
from .neighborhood import CODE_COUNT, QuantizedImage, lbp_codes
from .vector import FeatureVector


def code_histogram(codes: np.ndarray, bins: int = CODE_COUNT) -> np.ndarray:
    return np.bincount(codes.ravel(), minlength=bins).astype(np.float64)


def lbp(image: QuantizedImage) -> FeatureVector:
    histogram = code_histogram(lbp_codes(image))
    return FeatureVector(histogram, Descriptor.LBP, blocks=(CODE_COUNT,))
