from typing import Dict

from . import netpbm, png
from .format_names import Format
from .typing import Dumper, Loader

LOADERS: Dict[Format, Loader] = {
    Format.PNG: png.load_png,
    Format.PGM: netpbm.load_netpbm,
    Format.PPM: netpbm.load_netpbm,
}

DUMPERS: Dict[Format, Dumper] = {
    Format.PGM: netpbm.dump_pgm,
}
