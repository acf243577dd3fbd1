import warnings
from pathlib import Path
from typing import Any

import numpy as np
import PIL.Image

from texdiff.errors import DecodeError
from texdiff.image import FloatArray, Image, rgb_to_gray

SIXTEEN_BIT_GRAY_MODES = {"I", "I;16", "I;16B", "I;16L"}


def pil_to_gray(im: PIL.Image.Image) -> FloatArray:
    if im.mode in SIXTEEN_BIT_GRAY_MODES:
        gray: FloatArray = np.asarray(im, dtype=np.float64) / 65535
        return np.clip(gray, 0.0, 1.0)
    elif im.mode == "L":
        return np.asarray(im, dtype=np.float64) / 255
    elif im.mode == "1":
        return np.asarray(im.convert("L"), dtype=np.float64) / 255

    if "A" in im.getbands():
        warnings.warn("The alpha channel is ignored when converting to grayscale")
    if im.mode == "LA":
        return np.asarray(im.getchannel("L"), dtype=np.float64) / 255

    rgb = np.asarray(im.convert("RGB"), dtype=np.float64) / 255
    return rgb_to_gray(rgb)


def load_png(path: Path, **kwargs: Any) -> Image:
    try:
        with PIL.Image.open(path) as im:
            im.load()
            if im.format != "PNG":
                raise DecodeError(f"{path} is not a PNG file")
            return Image(pil_to_gray(im))
    except (OSError, PIL.Image.DecompressionBombError) as e:
        raise DecodeError(f"Could not decode {path} : {e}") from e
