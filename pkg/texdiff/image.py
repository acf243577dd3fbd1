"""Provides the Image class, the central model of texdiff.
Every input format is decoded to an Image, every diffusion method maps Images
to Images and every descriptor turns an Image into a feature vector.

Intensities are stored as float64 numbers, images read from disk are in [0, 1]"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Sequence, Tuple

import numpy as np
import numpy.typing as npt

from texdiff.errors import ShapeError, StratificationError
from texdiff.utils import group_by

FloatArray = npt.NDArray[np.float64]
IntArray = npt.NDArray[np.int64]

# ITU-R BT.601
LUMINANCE_WEIGHTS = (0.299, 0.587, 0.114)

DEFAULT_SEED = 0


@dataclass(frozen=True, eq=False)
class Image:
    """Single channel intensity grid, indexed as data[row, column], so
    data.shape == (height, width). The underlying array is read-only"""

    data: FloatArray

    def __post_init__(self) -> None:
        data = np.array(self.data, dtype=np.float64, copy=True)
        if data.ndim != 2:
            raise ShapeError(f"Images must be 2 dimensional, got shape {data.shape}")
        if data.size == 0:
            raise ShapeError("Images can't be empty")
        if not np.all(np.isfinite(data)):
            raise ValueError("Images can only hold finite values")
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    @classmethod
    def from_array(cls, values: Any) -> Image:
        return cls(np.asarray(values, dtype=np.float64))

    @property
    def height(self) -> int:
        return int(self.data.shape[0])

    @property
    def width(self) -> int:
        return int(self.data.shape[1])

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.height, self.width)

    def transpose(self) -> Image:
        return Image(self.data.T)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Image):
            return NotImplemented
        return bool(np.array_equal(self.data, other.data))

    __hash__ = object.__hash__


def rgb_to_gray(rgb: FloatArray) -> FloatArray:
    """Weighted sum of the last axis using the luminance weights. Pixels that
    are already gray (R = G = B) are passed through untouched"""
    weights = np.asarray(LUMINANCE_WEIGHTS, dtype=np.float64)
    weighted = rgb[..., :3] @ weights
    red, green, blue = rgb[..., 0], rgb[..., 1], rgb[..., 2]
    is_gray = (red == green) & (green == blue)
    gray: FloatArray = np.clip(np.where(is_gray, red, weighted), 0.0, 1.0)
    return gray


def normalize(image: Image) -> Image:
    """Affine rescale so that min maps to 0 and max maps to 1, constant images
    map to all zeros"""
    low = image.data.min()
    high = image.data.max()
    if high == low:
        return Image(np.zeros_like(image.data))
    if low == 0 and high == 1:
        return image
    return Image((image.data - low) / (high - low))


@dataclass(frozen=True)
class LabeledImage:
    image: Image
    class_id: int
    source_path: str

    def __post_init__(self) -> None:
        if self.class_id < 0:
            raise ValueError(f"class_id can't be negative : {self.class_id}")


@dataclass(frozen=True)
class Dataset:
    """Labeled images along with their stratified fold assignment. Items are
    kept in lexicographic path order"""

    items: Tuple[LabeledImage, ...]
    class_names: Tuple[str, ...]
    folds: int
    fold_of: Tuple[int, ...] = field(default=())

    @classmethod
    def from_items(
        cls,
        items: Sequence[LabeledImage],
        class_names: Sequence[str],
        folds: int,
        seed: int = DEFAULT_SEED,
    ) -> Dataset:
        labels = np.array([i.class_id for i in items], dtype=np.int64)
        fold_of = assign_folds(labels, len(class_names), folds, seed)
        return cls(
            items=tuple(items),
            class_names=tuple(class_names),
            folds=folds,
            fold_of=tuple(int(f) for f in fold_of),
        )

    @property
    def class_count(self) -> int:
        return len(self.class_names)

    @property
    def labels(self) -> IntArray:
        return np.array([i.class_id for i in self.items], dtype=np.int64)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[LabeledImage]:
        return iter(self.items)

    def fold_sizes(self) -> List[int]:
        counts = np.bincount(np.asarray(self.fold_of), minlength=self.folds)
        return [int(c) for c in counts]

    def describe(self) -> Dict[str, Any]:
        shapes = group_by(self.items, lambda i: i.image.shape)
        return {
            "images": len(self.items),
            "classes": self.class_count,
            "folds": self.folds,
            "fold_sizes": self.fold_sizes(),
            "shapes": {f"{w}x{h}": len(v) for (h, w), v in sorted(shapes.items())},
        }

    def content_digest(self) -> str:
        """Identifies the pixels and labels of the dataset, regardless of where
        it lives on disk or how it is split into folds"""
        h = hashlib.sha256()
        for name in self.class_names:
            h.update(name.encode("utf-8") + b"\0")
        for item in self.items:
            h.update(f"{item.class_id}:{item.image.height}x{item.image.width}".encode())
            h.update(item.image.data.tobytes())
        return h.hexdigest()


def assign_folds(
    labels: IntArray, class_count: int, folds: int, seed: int = DEFAULT_SEED
) -> IntArray:
    """Stratified fold assignment : the members of each class are shuffled
    then dealt round-robin over the folds. Each class starts dealing where the
    previous one stopped so that overall fold sizes stay within one of each
    other as well"""
    if folds < 1:
        raise StratificationError(f"Need at least one fold, got {folds}")

    rng = np.random.default_rng(seed)
    fold_of = np.empty(len(labels), dtype=np.int64)
    offset = 0
    for class_id in range(class_count):
        members = np.flatnonzero(labels == class_id)
        if len(members) < folds:
            raise StratificationError(
                f"Class {class_id} has {len(members)} images, which is not "
                f"enough for {folds} folds"
            )
        order = rng.permutation(len(members))
        fold_of[members[order]] = (np.arange(len(members)) + offset) % folds
        offset = (offset + len(members)) % folds

    return fold_of
