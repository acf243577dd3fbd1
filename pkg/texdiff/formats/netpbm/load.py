import re
from dataclasses import dataclass
from pathlib import Path
from typing import Any, List, Optional

import numpy as np
from parsimonious import Grammar, NodeVisitor, ParseError
from parsimonious.nodes import Node

from texdiff.errors import DecodeError
from texdiff.image import FloatArray, Image, rgb_to_gray

header_grammar = Grammar(
    r"""
    header      = magic sep width sep height sep maxval raster_sep
    magic       = "P2" / "P3" / "P5" / "P6"
    sep         = (ws / comment)+
    width       = ~r"[0-9]+"
    height      = ~r"[0-9]+"
    maxval      = ~r"[0-9]+"
    ws          = ~r"[ \t\r\n\f\v]+"
    comment     = ~r"#[^\r\n]*"
    raster_sep  = ~r"[ \t\r\n\f\v]"
    """
)

COMMENT = re.compile(rb"#[^\r\n]*")


@dataclass
class Header:
    magic: str
    width: int
    height: int
    maxval: int
    # offset of the first raster byte
    length: int

    @property
    def channels(self) -> int:
        return 3 if self.magic in ("P3", "P6") else 1

    @property
    def is_plain(self) -> bool:
        return self.magic in ("P2", "P3")

    @property
    def sample_count(self) -> int:
        return self.width * self.height * self.channels


class HeaderVisitor(NodeVisitor):
    unwrapped_exceptions = (ValueError,)

    def __init__(self, *args: Any, **kwargs: Any) -> None:
        super().__init__(*args, **kwargs)
        self.magic: Optional[str] = None
        self.width: Optional[int] = None
        self.height: Optional[int] = None
        self.maxval: Optional[int] = None

    def visit_header(self, node: Node, visited_children: List[Node]) -> Header:
        if None in (self.magic, self.width, self.height, self.maxval):
            raise ValueError("Incomplete netpbm header")
        return Header(
            magic=self.magic,  # type: ignore[arg-type]
            width=self.width,  # type: ignore[arg-type]
            height=self.height,  # type: ignore[arg-type]
            maxval=self.maxval,  # type: ignore[arg-type]
            length=node.end,
        )

    def visit_magic(self, node: Node, visited_children: List[Node]) -> None:
        self.magic = node.text

    def visit_width(self, node: Node, visited_children: List[Node]) -> None:
        self.width = int(node.text)

    def visit_height(self, node: Node, visited_children: List[Node]) -> None:
        self.height = int(node.text)

    def visit_maxval(self, node: Node, visited_children: List[Node]) -> None:
        self.maxval = int(node.text)

    def generic_visit(self, node: Node, visited_children: List[Node]) -> None:
        ...


def parse_header(raw: bytes) -> Header:
    # latin-1 maps every byte to exactly one character so string offsets
    # are byte offsets
    text = raw[:1024].decode("latin-1")
    header: Header = HeaderVisitor().visit(header_grammar.match(text))
    if header.width < 1 or header.height < 1:
        raise ValueError(f"Invalid dimensions : {header.width}x{header.height}")
    if not 0 < header.maxval < 65536:
        raise ValueError(f"maxval out of the [1, 65535] range : {header.maxval}")
    return header


def read_samples(raw: bytes, header: Header) -> np.ndarray:
    body = raw[header.length :]
    if header.is_plain:
        tokens = COMMENT.sub(b"", body).split()
        if len(tokens) < header.sample_count:
            raise ValueError(
                f"Expected {header.sample_count} samples, found {len(tokens)}"
            )
        samples = np.array(
            [int(t) for t in tokens[: header.sample_count]], dtype=np.int64
        )
    else:
        dtype = np.dtype(np.uint8) if header.maxval < 256 else np.dtype(">u2")
        expected = header.sample_count * dtype.itemsize
        if len(body) < expected:
            raise ValueError(f"Raster is truncated : {len(body)} of {expected} bytes")
        samples = np.frombuffer(body, dtype=dtype, count=header.sample_count)

    if samples.max(initial=0) > header.maxval:
        raise ValueError(f"Sample values exceed maxval {header.maxval}")

    return samples.astype(np.int64)


def decode_netpbm(raw: bytes) -> FloatArray:
    header = parse_header(raw)
    samples = read_samples(raw, header)
    values = samples.astype(np.float64) / header.maxval
    if header.channels == 1:
        gray: FloatArray = values.reshape(header.height, header.width)
        return gray
    rgb = values.reshape(header.height, header.width, 3)
    return rgb_to_gray(rgb)


def load_netpbm(path: Path, **kwargs: Any) -> Image:
    try:
        raw = path.read_bytes()
    except OSError as e:
        raise DecodeError(f"Could not read {path} : {e}") from e

    try:
        return Image(decode_netpbm(raw))
    except (ParseError, ValueError) as e:
        raise DecodeError(f"Could not decode {path} : {e}") from e
