from pathlib import Path
from typing import Any, Dict

import numpy as np

from texdiff.image import Image


def encode_pgm(image: Image) -> bytes:
    """Raw 8 bit PGM, intensities are clipped to [0, 1] before being scaled"""
    levels = np.rint(np.clip(image.data, 0.0, 1.0) * 255).astype(np.uint8)
    header = f"P5\n{image.width} {image.height}\n255\n".encode("ascii")
    return header + levels.tobytes()


def dump_pgm(image: Image, path: Path, **kwargs: Any) -> Dict[Path, bytes]:
    if path.is_dir():
        path = path / "image.pgm"
    return {path: encode_pgm(image)}
