"""Evaluates the original features joined with the features of each scale of
a diffusion stack, one iteration at a time"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from texdiff.descriptors import Descriptor, DescriptorOptions, extract
from texdiff.descriptors.extract import DEFAULT_OPTIONS
from texdiff.diffusion import DiffusionParams, Method, iter_scales
from texdiff.errors import AlignmentError, ConfigurationError
from texdiff.image import Dataset, Image

from .table import FeatureTable, concat_features
from .validation import Accuracy, Classifier, cross_validate


@dataclass(frozen=True)
class SweepResult:
    method: Method
    descriptor: Descriptor
    classifier: Classifier
    # original features only
    baseline: Accuracy
    # curve[it - 1] is the accuracy of the original features joined with the
    # features at iteration it
    curve: Tuple[Accuracy, ...]

    def __post_init__(self) -> None:
        if not self.curve:
            raise ConfigurationError("A sweep needs at least one iteration")

    @property
    def n_scales(self) -> int:
        return len(self.curve)

    @property
    def best_it(self) -> int:
        """Iteration with the highest mean accuracy, the earliest one on ties"""
        return int(np.argmax([a.mean for a in self.curve])) + 1

    @property
    def best(self) -> Accuracy:
        return self.curve[self.best_it - 1]

    @property
    def gain(self) -> float:
        return self.best.mean - self.baseline.mean

    def accuracy_at(self, it: int) -> Accuracy:
        if it == 0:
            return self.baseline
        return self.curve[it - 1]


def table_at(
    dataset: Dataset,
    images: Sequence[Image],
    descriptor: Descriptor,
    it: int,
    options: DescriptorOptions,
) -> FeatureTable:
    vectors = [extract(image, descriptor, options) for image in images]
    return FeatureTable.from_vectors(vectors, dataset, it)


def feature_tables(
    dataset: Dataset,
    method: Method,
    descriptor: Descriptor,
    n_scales: int,
    params: DiffusionParams,
    options: DescriptorOptions = DEFAULT_OPTIONS,
) -> Iterator[FeatureTable]:
    """Yields the table of the original images then the tables at
    it = 1 .. n_scales. All the images are diffused in lockstep so only one
    scale per image is held at a time"""
    originals = [item.image for item in dataset]
    yield table_at(dataset, originals, descriptor, 0, options)

    stacks = [iter_scales(image, method, n_scales, params) for image in originals]
    for frames in zip(*stacks):
        it = frames[0][0]
        images = [image for _, image in frames]
        yield table_at(dataset, images, descriptor, it, options)


def sweep_tables(
    tables: Iterable[FeatureTable],
    method: Method,
    classifiers: Sequence[Classifier],
) -> Dict[Classifier, SweepResult]:
    """The first table must hold the features of the original images, the
    following ones the features at it = 1, 2, ..."""
    iterator = iter(tables)
    original = next(iterator, None)
    if original is None:
        raise ConfigurationError("No feature table to evaluate")
    if original.it != 0:
        raise AlignmentError(f"The first table must be it=0, got it={original.it}")

    baselines = {c: cross_validate(original, c) for c in classifiers}
    curves: Dict[Classifier, List[Accuracy]] = {c: [] for c in classifiers}
    for expected_it, table in enumerate(iterator, start=1):
        if table.it != expected_it:
            raise AlignmentError(
                f"Expected the table of it={expected_it}, got it={table.it}"
            )
        joined = concat_features(original, table)
        for classifier in classifiers:
            curves[classifier].append(cross_validate(joined, classifier))

    return {
        c: SweepResult(
            method=method,
            descriptor=original.descriptor,
            classifier=c,
            baseline=baselines[c],
            curve=tuple(curves[c]),
        )
        for c in classifiers
    }


def sweep(
    dataset: Dataset,
    method: Method,
    descriptor: Descriptor,
    classifier: Classifier,
    n_scales: int,
    params: DiffusionParams,
    options: DescriptorOptions = DEFAULT_OPTIONS,
) -> SweepResult:
    tables = feature_tables(dataset, method, descriptor, n_scales, params, options)
    return sweep_tables(tables, method, [classifier])[classifier]
