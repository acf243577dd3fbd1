"""The 8-connected ring around each pixel and the binary codes built from it.

Ring order : p = 0 is the east neighbour, then counter-clockwise

    3 2 1
    4 c 0
    5 6 7

Borders replicate the edge pixels so every pixel of the image gets a code"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np
import numpy.typing as npt
from more_itertools import circular_shifts, pairwise

from texdiff.errors import ParameterError, ShapeError
from texdiff.image import Image, IntArray

BoolArray = npt.NDArray[np.bool_]

# (row offset, column offset) of neighbour p
RING_OFFSETS: Tuple[Tuple[int, int], ...] = (
    (0, 1),
    (-1, 1),
    (-1, 0),
    (-1, -1),
    (0, -1),
    (1, -1),
    (1, 0),
    (1, 1),
)

P = len(RING_OFFSETS)
CODE_COUNT = 2 ** P


@dataclass(frozen=True)
class NeighborhoodSpec:
    P: int = 8
    r: int = 1

    def __post_init__(self) -> None:
        if (self.P, self.r) != (8, 1):
            raise ParameterError(
                f"Only the P=8, r=1 neighbourhood is supported, got "
                f"P={self.P}, r={self.r}"
            )


@dataclass(frozen=True, eq=False)
class QuantizedImage:
    """Integer gray levels in [0, 255], indexed as levels[row, column]"""

    levels: IntArray

    def __post_init__(self) -> None:
        levels = np.array(self.levels, dtype=np.int64, copy=True)
        if levels.ndim != 2 or levels.size == 0:
            raise ShapeError(f"Expected a non-empty 2D array, got {levels.shape}")
        if levels.min() < 0 or levels.max() > 255:
            raise ValueError("Gray levels must lie in [0, 255]")
        levels.setflags(write=False)
        object.__setattr__(self, "levels", levels)

    @property
    def height(self) -> int:
        return int(self.levels.shape[0])

    @property
    def width(self) -> int:
        return int(self.levels.shape[1])

    @property
    def pixel_count(self) -> int:
        return int(self.levels.size)


def quantize(image: Image) -> QuantizedImage:
    """levels = round(255 * intensity), intensities are expected in [0, 1]"""
    levels = np.rint(np.clip(image.data, 0.0, 1.0) * 255).astype(np.int64)
    return QuantizedImage(levels)


def ring_neighbors(values: np.ndarray) -> np.ndarray:
    """Stack of the 8 neighbours of every pixel, shape (8, height, width)"""
    padded = np.pad(values, 1, mode="edge")
    height, width = values.shape
    return np.stack(
        [
            padded[1 + dr : 1 + dr + height, 1 + dc : 1 + dc + width]
            for dr, dc in RING_OFFSETS
        ]
    )


def pack_bits(bits: BoolArray) -> IntArray:
    """sum_p bits[p] 2^p along the first axis, whatever the number of bits"""
    weights = 2 ** np.arange(bits.shape[0], dtype=np.int64)
    codes: IntArray = np.tensordot(weights, bits.astype(np.int64), axes=1)
    return codes


def sign_bits(levels: IntArray) -> BoolArray:
    """s(g_p - g_c) for every pixel, s(x) = 1 iff x >= 0"""
    bits: BoolArray = ring_neighbors(levels) >= levels
    return bits


def lbp_codes(image: QuantizedImage) -> IntArray:
    return pack_bits(sign_bits(image.levels))


def window_ring(window: Sequence[Sequence[int]]) -> Tuple[int, Tuple[int, ...]]:
    """(g_c, (g_0 .. g_7)) of a 3x3 window"""
    w = np.asarray(window, dtype=np.int64)
    if w.shape != (3, 3):
        raise ShapeError(f"Expected a 3x3 window, got shape {w.shape}")
    return int(w[1, 1]), tuple(int(w[1 + dr, 1 + dc]) for dr, dc in RING_OFFSETS)


def lbp_code(window: Sequence[Sequence[int]]) -> int:
    center, ring = window_ring(window)
    return sum(1 << p for p, g in enumerate(ring) if g >= center)


def code_to_bits(code: int) -> Tuple[int, ...]:
    return tuple((code >> p) & 1 for p in range(P))


def bits_to_code(bits: Sequence[int]) -> int:
    return sum(1 << p for p, b in enumerate(bits) if b)


def uniformity(bits: Sequence[int]) -> int:
    """Number of 0/1 transitions when going around the ring, wrap included"""
    if not bits:
        return 0
    closed_ring = [*bits, bits[0]]
    return sum(1 for a, b in pairwise(closed_ring) if a != b)


def is_uniform(code: int) -> bool:
    return uniformity(code_to_bits(code)) <= 2


def riu2_from_bits(bits: Sequence[int]) -> int:
    if uniformity(bits) < 2:
        return sum(bits)
    return len(bits) + 1


def riu2_code(window: Sequence[Sequence[int]]) -> int:
    """Rotation invariant uniform code in [0, P + 1]. The definition uses
    U < 2, so only the all-zeros and all-ones patterns keep their bit
    count, every other pattern falls in the P + 1 bin"""
    return riu2_from_bits(code_to_bits(lbp_code(window)))


def rotate_code(code: int, shift: int) -> int:
    """Rotates the ring of a code by shift positions counter-clockwise"""
    bits = code_to_bits(code)
    rotated = list(circular_shifts(bits))[(-shift) % P]
    return bits_to_code(rotated)


UNIFORMITY_TABLE: IntArray = np.array(
    [uniformity(code_to_bits(c)) for c in range(CODE_COUNT)], dtype=np.int64
)
RIU2_TABLE: IntArray = np.array(
    [riu2_from_bits(code_to_bits(c)) for c in range(CODE_COUNT)], dtype=np.int64
)
ROTATION_TABLES: IntArray = np.array(
    [[rotate_code(c, s) for c in range(CODE_COUNT)] for s in range(P)],
    dtype=np.int64,
)
