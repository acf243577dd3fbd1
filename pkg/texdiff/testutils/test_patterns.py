"""Procedural textures, synthetic datasets and a brute-force reference
implementation of the descriptors for tests"""

import cmath
import math
import tempfile
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterator, List, Sequence, Tuple

import numpy as np

from texdiff.formats.netpbm.dump import encode_pgm
from texdiff.image import FloatArray, Image


@contextmanager
def open_temp_dir() -> Iterator[Path]:
    with tempfile.TemporaryDirectory() as temp_dir:
        yield Path(temp_dir)


def stripes(shape: Tuple[int, int], period: float, angle: float = 0) -> Image:
    rows, columns = np.mgrid[0 : shape[0], 0 : shape[1]]
    phase = columns * math.cos(angle) + rows * math.sin(angle)
    return Image(0.5 + 0.5 * np.sin(2 * math.pi * phase / period))


def checkerboard(shape: Tuple[int, int], cell: int) -> Image:
    rows, columns = np.mgrid[0 : shape[0], 0 : shape[1]]
    return Image(((rows // cell + columns // cell) % 2).astype(np.float64))


def noise(shape: Tuple[int, int], seed: int) -> Image:
    return Image(np.random.default_rng(seed).random(shape))


def ramp(shape: Tuple[int, int]) -> Image:
    """Intensity equal to the column index"""
    return Image(np.tile(np.arange(shape[1], dtype=np.float64), (shape[0], 1)))


def write_dataset(root: Path, classes: Dict[str, List[Image]]) -> None:
    for name, images in classes.items():
        folder = root / name
        folder.mkdir(parents=True, exist_ok=True)
        for index, image in enumerate(images):
            (folder / f"{index:03}.pgm").write_bytes(encode_pgm(image))


def synthetic_classes(
    per_class: int = 4, side: int = 12, seed: int = 0
) -> Dict[str, List[Image]]:
    """Three visually distinct texture classes, each image with its own noise"""
    rng = np.random.default_rng(seed)

    def jitter(image: Image) -> Image:
        noisy = image.data + 0.05 * rng.standard_normal(image.shape)
        return Image(np.clip(noisy, 0, 1))

    shape = (side, side)
    return {
        "checker": [jitter(checkerboard(shape, 3)) for _ in range(per_class)],
        "hstripes": [jitter(stripes(shape, 4, math.pi / 2)) for _ in range(per_class)],
        "vstripes": [jitter(stripes(shape, 4)) for _ in range(per_class)],
    }


# Reference descriptors, pixel by pixel with plain python integers

P = 8


def ring_offset(p: int) -> Tuple[int, int]:
    """(row, column) offset of neighbour p, p = 0 is east and p grows
    counter-clockwise (rows grow downwards)"""
    angle = 2 * math.pi * p / P
    return -round(math.sin(angle)), round(math.cos(angle))


def clamped(values: Sequence[Sequence[int]], row: int, column: int) -> int:
    height, width = len(values), len(values[0])
    return values[min(max(row, 0), height - 1)][min(max(column, 0), width - 1)]


def ring(values: Sequence[Sequence[int]], row: int, column: int) -> List[int]:
    result = []
    for p in range(P):
        dr, dc = ring_offset(p)
        result.append(clamped(values, row + dr, column + dc))
    return result


def pixels(values: Sequence[Sequence[int]]) -> Iterator[Tuple[int, int]]:
    for row in range(len(values)):
        for column in range(len(values[0])):
            yield row, column


def reference_lbp_code(values: Sequence[Sequence[int]], row: int, column: int) -> int:
    center = values[row][column]
    return sum(2 ** p for p, g in enumerate(ring(values, row, column)) if g >= center)


def transitions(bits: Sequence[int]) -> int:
    return sum(bits[p] != bits[(p + 1) % len(bits)] for p in range(len(bits)))


def reference_lbp(values: Sequence[Sequence[int]]) -> List[int]:
    histogram = [0] * 256
    for row, column in pixels(values):
        histogram[reference_lbp_code(values, row, column)] += 1
    return histogram


def reference_lbpv(values: Sequence[Sequence[int]]) -> List[Fraction]:
    histogram = [Fraction(0)] * (P + 2)
    for row, column in pixels(values):
        center = values[row][column]
        neighbours = ring(values, row, column)
        bits = [int(g >= center) for g in neighbours]
        code = sum(bits) if transitions(bits) < 2 else P + 1
        mean = Fraction(sum(neighbours), P)
        variance = sum((g - mean) ** 2 for g in neighbours) / P
        histogram[code] += variance
    return histogram


def reference_clbp(values: Sequence[Sequence[int]]) -> List[int]:
    magnitudes = {
        (row, column): [abs(g - values[row][column]) for g in ring(values, row, column)]
        for row, column in pixels(values)
    }
    all_magnitudes = [m for ms in magnitudes.values() for m in ms]
    threshold = Fraction(sum(all_magnitudes), len(all_magnitudes))
    all_levels = [values[r][c] for r, c in pixels(values)]
    mean_level = Fraction(sum(all_levels), len(all_levels))

    sign = [0] * 256
    magnitude = [0] * 256
    center = [0] * 2
    for row, column in pixels(values):
        sign[reference_lbp_code(values, row, column)] += 1
        ring_magnitudes = enumerate(magnitudes[row, column])
        code = sum(2 ** p for p, m in ring_magnitudes if m >= threshold)
        magnitude[code] += 1
        center[int(values[row][column] >= mean_level)] += 1
    return sign + magnitude + center


def reference_lbphf(values: Sequence[Sequence[int]]) -> List[float]:
    histogram = reference_lbp(values)
    features: List[float] = []
    for n in range(1, P):
        row = []
        for r in range(P):
            # n contiguous ones starting at neighbour r
            code = sum(2 ** ((r + i) % P) for i in range(n))
            row.append(histogram[code])
        for u in range(P // 2 + 1):
            h = sum(row[r] * cmath.exp(-2j * math.pi * u * r / P) for r in range(P))
            features.append(abs(h))
    non_uniform = 0
    for code in range(256):
        bits = [(code >> p) & 1 for p in range(P)]
        if transitions(bits) > 2:
            non_uniform += histogram[code]
    return features + [histogram[0], histogram[255], non_uniform]


def reference_ltp(values: Sequence[Sequence[int]], k: int) -> List[int]:
    upper = [0] * 256
    lower = [0] * 256
    for row, column in pixels(values):
        center = values[row][column]
        neighbours = ring(values, row, column)
        upper[sum(2 ** p for p, g in enumerate(neighbours) if g > center + k)] += 1
        lower[sum(2 ** p for p, g in enumerate(neighbours) if g < center - k)] += 1
    return upper + lower


def reference_cslbp(normalized: FloatArray, T: float) -> List[int]:
    values = normalized.tolist()
    height, width = len(values), len(values[0])
    row_bounds = cell_bounds(height)
    column_bounds = cell_bounds(width)
    histogram = [0] * 256
    for row, column in pixels(values):
        neighbours = ring(values, row, column)
        code = sum(
            2 ** i for i in range(P // 2) if neighbours[i] - neighbours[i + P // 2] > T
        )
        cell = 4 * cell_index(row, row_bounds) + cell_index(column, column_bounds)
        histogram[16 * cell + code] += 1
    return histogram


def cell_bounds(size: int) -> List[int]:
    """Start of each of the 4 cells along an axis of the given size, the
    first size % 4 cells get one extra pixel"""
    base, extra = divmod(size, 4)
    starts = []
    start = 0
    for cell in range(4):
        starts.append(start)
        start += base + (1 if cell < extra else 0)
    return starts


def cell_index(position: int, starts: List[int]) -> int:
    return max(i for i, start in enumerate(starts) if start <= position)
