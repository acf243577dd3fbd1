from enum import Enum


class Format(str, Enum):
    PNG = "png"
    PGM = "pgm"
    PPM = "ppm"
