"""Local pattern descriptors on the 8-pixel ring of radius 1"""

from .clbp import clbp
from .cslbp import cslbp
from .extract import DEFAULT_OPTIONS, EXTRACTORS, DescriptorOptions, extract
from .lbp import lbp
from .lbphf import lbphf, lbphf_from_codes
from .lbpv import lbpv
from .ltp import ltp
from .names import Descriptor
from .neighborhood import (
    NeighborhoodSpec,
    QuantizedImage,
    lbp_code,
    quantize,
    riu2_code,
    uniformity,
)
from .vector import VECTOR_LENGTHS, FeatureVector
