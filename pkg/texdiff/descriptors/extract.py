from dataclasses import dataclass
from typing import Dict, Protocol, Union

from texdiff.errors import ParameterError
from texdiff.image import Image

from .clbp import clbp
from .cslbp import DEFAULT_T as CSLBP_T
from .cslbp import cslbp
from .lbp import lbp
from .lbphf import lbphf
from .lbpv import lbpv
from .ltp import DEFAULT_K as LTP_K
from .ltp import ltp
from .names import Descriptor
from .neighborhood import quantize
from .vector import FeatureVector


@dataclass(frozen=True)
class DescriptorOptions:
    # LTP dead zone, in gray levels
    ltp_k: int = LTP_K
    # CSLBP threshold, on the range-normalized image
    cslbp_t: float = CSLBP_T
    # 3x3 median filter before CSLBP
    cslbp_median: bool = False


DEFAULT_OPTIONS = DescriptorOptions()


class Extractor(Protocol):
    def __call__(self, image: Image, options: DescriptorOptions) -> FeatureVector:
        ...


def extract_lbp(image: Image, options: DescriptorOptions) -> FeatureVector:
    return lbp(quantize(image))


def extract_lbpv(image: Image, options: DescriptorOptions) -> FeatureVector:
    return lbpv(quantize(image))


def extract_clbp(image: Image, options: DescriptorOptions) -> FeatureVector:
    return clbp(quantize(image))


def extract_lbphf(image: Image, options: DescriptorOptions) -> FeatureVector:
    return lbphf(quantize(image))


def extract_ltp(image: Image, options: DescriptorOptions) -> FeatureVector:
    return ltp(quantize(image), options.ltp_k)


def extract_cslbp(image: Image, options: DescriptorOptions) -> FeatureVector:
    return cslbp(image, options.cslbp_t, median=options.cslbp_median)


EXTRACTORS: Dict[Descriptor, Extractor] = {
    Descriptor.LBP: extract_lbp,
    Descriptor.LBPV: extract_lbpv,
    Descriptor.CLBP: extract_clbp,
    Descriptor.LBPHF: extract_lbphf,
    Descriptor.LTP: extract_ltp,
    Descriptor.CSLBP: extract_cslbp,
}


def extract(
    image: Image,
    descriptor: Union[Descriptor, str],
    options: DescriptorOptions = DEFAULT_OPTIONS,
) -> FeatureVector:
    """Raw descriptor histogram of the image, L1-normalized block by block"""
    try:
        descriptor = Descriptor(descriptor)
    except ValueError:
        raise ParameterError(f"Unknown descriptor : {descriptor!r}") from None

    return EXTRACTORS[descriptor](image, options).l1_normalized()
