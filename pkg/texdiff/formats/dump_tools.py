import string
from pathlib import Path
from typing import Any, Dict, TypedDict

DEFAULT_FRAME_TEMPLATE = "{stem}_{method}_{it}.pgm"


class FormatParameters(TypedDict, total=False):
    stem: str
    # lowercase method name : gaussian, pm, fbr, nl
    method: str
    # 1-based iteration index
    it: int


class FrameNameFormat:
    """Builds the file names of the frames of a scale stack inside a given
    folder, the template is a str.format string that can use the keys of
    FormatParameters"""

    def __init__(self, folder: Path, template: str = DEFAULT_FRAME_TEMPLATE):
        self.folder = folder
        self.template = template

    def path_for(self, params: FormatParameters) -> Path:
        fields: Dict[str, Any] = {
            key: strip_separators(value) if isinstance(value, str) else value
            for key, value in params.items()
        }
        filename = CaseFormatter().format(self.template, **fields).strip()
        return self.folder / filename


SEPARATORS = str.maketrans("", "", "/\\")


def strip_separators(s: str) -> str:
    """Frame names never leave the output folder"""
    return s.translate(SEPARATORS)


CASE_CONVERSIONS = {"u": str.upper, "l": str.lower}


class CaseFormatter(string.Formatter):
    """str.format with two extra suffixes for string fields : {stem:u} is
    uppercased and {stem:l} lowercased"""

    def format_field(self, value: Any, format_spec: str) -> str:
        convert = CASE_CONVERSIONS.get(format_spec[-1:])
        if isinstance(value, str) and convert is not None:
            return super().format_field(convert(value), format_spec[:-1])
        return super().format_field(value, format_spec)
