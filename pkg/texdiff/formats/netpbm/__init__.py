"""
Netpbm grayscale and color maps (.pgm and .ppm), both the plain (ASCII) and
the raw (binary) variants.

https://netpbm.sourceforge.net/doc/pgm.html
https://netpbm.sourceforge.net/doc/ppm.html
"""

from .dump import dump_pgm
from .load import load_netpbm
