"""Local ternary pattern : neighbours more than k above the center count as
+1, more than k below as -1, the rest as 0. The ternary code is split in an
upper (+1) and a lower (-1) binary pattern"""

from typing import Tuple

import numpy as np

from texdiff.errors import ParameterError
from texdiff.image import IntArray

from .lbp import code_histogram
from .names import Descriptor
from .neighborhood import CODE_COUNT, QuantizedImage, pack_bits, ring_neighbors
from .vector import FeatureVector

DEFAULT_K = 5


def ltp_codes(image: QuantizedImage, k: int = DEFAULT_K) -> Tuple[IntArray, IntArray]:
    if k < 0:
        raise ParameterError(f"LTP threshold can't be negative, got {k}")
    levels = image.levels
    ring = ring_neighbors(levels)
    upper = pack_bits(ring > levels + k)
    lower = pack_bits(ring < levels - k)
    return upper, lower


def ltp(image: QuantizedImage, k: int = DEFAULT_K) -> FeatureVector:
    upper, lower = ltp_codes(image, k)
    histogram = np.concatenate([code_histogram(upper), code_histogram(lower)])
    return FeatureVector(histogram, Descriptor.LTP, blocks=(CODE_COUNT, CODE_COUNT))
