from enum import Enum


class Descriptor(str, Enum):
    LBP = "lbp"
    LBPV = "lbpv"
    CLBP = "clbp"
    LBPHF = "lbphf"
    LTP = "ltp"
    CSLBP = "cslbp"
