from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
import numpy.typing as npt

from texdiff.descriptors import Descriptor, FeatureVector
from texdiff.errors import AlignmentError
from texdiff.image import Dataset, FloatArray, IntArray


@dataclass(frozen=True, eq=False)
class FeatureTable:
    """One feature row per image of a dataset, computed at a given scale.
    it = 0 means the original images"""

    rows: FloatArray
    labels: IntArray
    fold_of: IntArray
    descriptor: Descriptor
    it: int
    class_count: int
    folds: int

    def __post_init__(self) -> None:
        rows = np.array(self.rows, dtype=np.float64, copy=True)
        labels = np.array(self.labels, dtype=np.int64, copy=True)
        fold_of = np.array(self.fold_of, dtype=np.int64, copy=True)
        if rows.ndim != 2:
            raise AlignmentError(f"Feature rows must form a 2D array, got {rows.shape}")
        if not len(rows) == len(labels) == len(fold_of):
            raise AlignmentError(
                f"{len(rows)} rows for {len(labels)} labels and "
                f"{len(fold_of)} fold indices"
            )
        for array in (rows, labels, fold_of):
            array.setflags(write=False)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "fold_of", fold_of)

    @classmethod
    def from_rows(
        cls, rows: FloatArray, dataset: Dataset, descriptor: Descriptor, it: int
    ) -> FeatureTable:
        return cls(
            rows=rows,
            labels=dataset.labels,
            fold_of=np.asarray(dataset.fold_of, dtype=np.int64),
            descriptor=descriptor,
            it=it,
            class_count=dataset.class_count,
            folds=dataset.folds,
        )

    @classmethod
    def from_vectors(
        cls, vectors: Sequence[FeatureVector], dataset: Dataset, it: int
    ) -> FeatureTable:
        if len(vectors) != len(dataset):
            raise AlignmentError(
                f"Got {len(vectors)} feature vectors for {len(dataset)} images"
            )
        if not vectors:
            raise AlignmentError("Can't build a feature table without rows")
        descriptors = {v.descriptor for v in vectors}
        if len(descriptors) != 1:
            raise AlignmentError(f"Mixed descriptors in one table : {descriptors}")
        rows = np.stack([v.values for v in vectors])
        return cls.from_rows(rows, dataset, vectors[0].descriptor, it)

    @property
    def width(self) -> int:
        return int(self.rows.shape[1])

    def __len__(self) -> int:
        return len(self.rows)

    def subset(self, mask: npt.NDArray[np.bool_]) -> FeatureTable:
        return FeatureTable(
            rows=self.rows[mask],
            labels=self.labels[mask],
            fold_of=self.fold_of[mask],
            descriptor=self.descriptor,
            it=self.it,
            class_count=self.class_count,
            folds=self.folds,
        )


def concat_features(original: FeatureTable, scale_it: FeatureTable) -> FeatureTable:
    """Joins the features of the original images with the ones computed at
    another scale, row by row"""
    if original.descriptor != scale_it.descriptor:
        raise AlignmentError(
            f"Can't join {original.descriptor.value} features with "
            f"{scale_it.descriptor.value} features"
        )
    if len(original) != len(scale_it):
        raise AlignmentError(
            f"Tables have different row counts : {len(original)} and {len(scale_it)}"
        )
    if not np.array_equal(original.labels, scale_it.labels):
        raise AlignmentError("Tables don't have the same labels in the same order")
    if not np.array_equal(original.fold_of, scale_it.fold_of):
        raise AlignmentError("Tables don't share the same fold assignment")

    return FeatureTable(
        rows=np.hstack([original.rows, scale_it.rows]),
        labels=original.labels,
        fold_of=original.fold_of,
        descriptor=original.descriptor,
        it=scale_it.it,
        class_count=original.class_count,
        folds=original.folds,
    )
