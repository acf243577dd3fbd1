from pathlib import Path
from typing import Any, Dict, Protocol

from texdiff.image import Image


class Dumper(Protocol):
    """A Dumper is a callable that takes in an Image, a Path hint and
    potential options, then gives back a dict that maps file names to the
    binary content of the file"""

    def __call__(self, image: Image, path: Path, **kwargs: Any) -> Dict[Path, bytes]:
        ...


class Loader(Protocol):
    """A Loader decodes a file to a grayscale Image with intensities in [0, 1]
    and possibly takes in some options via the kwargs"""

    def __call__(self, path: Path, **kwargs: Any) -> Image:
        ...
