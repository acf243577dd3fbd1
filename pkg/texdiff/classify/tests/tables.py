from typing import Optional, Sequence

import numpy as np

from texdiff.descriptors import Descriptor
from texdiff.image import Dataset, Image, LabeledImage
from texdiff.testutils.test_patterns import noise

from ..table import FeatureTable


def make_table(
    rows: Sequence[Sequence[float]],
    labels: Sequence[int],
    fold_of: Optional[Sequence[int]] = None,
    folds: int = 2,
    it: int = 0,
) -> FeatureTable:
    if fold_of is None:
        fold_of = [i % folds for i in range(len(labels))]
    return FeatureTable(
        rows=np.asarray(rows, dtype=np.float64),
        labels=np.asarray(labels),
        fold_of=np.asarray(fold_of),
        descriptor=Descriptor.LBP,
        it=it,
        class_count=max(labels) + 1,
        folds=folds,
    )


def make_dataset(images: Sequence[Sequence[Image]], folds: int = 2) -> Dataset:
    items = [
        LabeledImage(image=image, class_id=class_id, source_path=f"c{class_id}/{i}")
        for class_id, class_images in enumerate(images)
        for i, image in enumerate(class_images)
    ]
    return Dataset.from_items(
        items, class_names=[f"c{c}" for c in range(len(images))], folds=folds
    )


def noise_dataset(per_class: int = 4, side: int = 8) -> Dataset:
    return make_dataset(
        [
            [noise((side, side), seed=10 * c + i) for i in range(per_class)]
            for c in range(2)
        ]
    )
