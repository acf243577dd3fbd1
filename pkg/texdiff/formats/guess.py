from pathlib import Path

from texdiff.errors import DecodeError, FormatError

from .format_names import Format

PNG_SIGNATURE = b"\x89PNG\r\n\x1a\n"

NETPBM_MAGICS = {
    b"P2": Format.PGM,
    b"P5": Format.PGM,
    b"P3": Format.PPM,
    b"P6": Format.PPM,
}


def guess_format(path: Path) -> Format:
    """Recognize the format from the first bytes of the file, the extension
    is not looked at"""
    if path.is_dir():
        raise FormatError(f"Can't guess image format for a folder : {path}")

    try:
        with path.open(mode="rb") as f:
            magic = f.read(len(PNG_SIGNATURE))
    except OSError as e:
        raise DecodeError(f"Could not read {path} : {e}") from e

    if magic == PNG_SIGNATURE:
        return Format.PNG

    try:
        return NETPBM_MAGICS[magic[:2]]
    except KeyError:
        pass

    raise FormatError(f"Unrecognized image format : {path}")

