"""Computes the features of every scale of every image of a dataset, going
through the feature cache"""

from __future__ import annotations

from concurrent.futures import Executor, ProcessPoolExecutor
from contextlib import nullcontext
from dataclasses import dataclass
from typing import ContextManager, Dict, Iterator, List, Optional, Sequence, Tuple

import click
import numpy as np

from texdiff.classify import FeatureTable
from texdiff.descriptors import Descriptor, DescriptorOptions, extract
from texdiff.diffusion import DiffusionParams, Method, advance
from texdiff.image import Dataset, FloatArray, Image

from .cache import FeatureCache, FeatureKey


@dataclass(frozen=True)
class ScaleTask:
    """Everything a worker needs to produce one image at one scale and its
    features. it = 0 stands for the original image"""

    source: Image
    previous: Image
    it: int
    method: Method
    params: DiffusionParams
    descriptors: Tuple[Descriptor, ...]
    options: DescriptorOptions


ScaleResult = Tuple[Image, Dict[Descriptor, FloatArray]]


def run_scale_task(task: ScaleTask) -> ScaleResult:
    if task.it == 0:
        image = task.source
    else:
        image = advance(task.method, task.source, task.previous, task.it, task.params)
    features = {d: extract(image, d, task.options).values for d in task.descriptors}
    return image, features


class FeatureStore:
    def __init__(
        self,
        dataset: Dataset,
        cache: FeatureCache,
        params: DiffusionParams,
        options: DescriptorOptions,
        jobs: int = 1,
    ):
        self.dataset = dataset
        self.cache = cache
        self.params = params
        self.options = options
        self.jobs = jobs
        self.dataset_digest = dataset.content_digest()

    def key(self, method: Method, it: int, descriptor: Descriptor) -> FeatureKey:
        return FeatureKey.for_scale(
            self.dataset_digest, method, it, descriptor, self.params, self.options
        )

    def missing(
        self, method: Method, descriptors: Sequence[Descriptor], n_scales: int
    ) -> Dict[int, Tuple[Descriptor, ...]]:
        """Descriptors without a usable cache entry, for it = 0 .. n_scales"""
        rows = len(self.dataset)
        return {
            it: tuple(
                d
                for d in descriptors
                if not self.cache.has(self.key(method, it, d), rows)
            )
            for it in range(n_scales + 1)
        }

    def executor(self) -> ContextManager[Optional[Executor]]:
        if self.jobs > 1:
            return ProcessPoolExecutor(max_workers=self.jobs)
        return nullcontext()

    def ensure(
        self,
        methods: Sequence[Method],
        descriptors: Sequence[Descriptor],
        n_scales: int,
    ) -> int:
        """Fills the cache for every (method, it, descriptor), returns the
        number of entries that had to be computed"""
        computed = 0
        with self.executor() as executor:
            for method in methods:
                computed += self._ensure_method(method, descriptors, n_scales, executor)
        return computed

    def run_tasks(
        self, tasks: List[ScaleTask], executor: Optional[Executor]
    ) -> List[ScaleResult]:
        """Results in the order of tasks"""
        if executor is None:
            return [run_scale_task(t) for t in tasks]
        chunksize = max(1, len(tasks) // (4 * self.jobs))
        return list(executor.map(run_scale_task, tasks, chunksize=chunksize))

    def _ensure_method(
        self,
        method: Method,
        descriptors: Sequence[Descriptor],
        n_scales: int,
        executor: Optional[Executor],
    ) -> int:
        missing = self.missing(method, descriptors, n_scales)
        last_it = max((it for it, ds in missing.items() if ds), default=None)
        if last_it is None:
            return 0

        sources = [item.image for item in self.dataset]
        states = list(sources)
        computed = 0
        with click.progressbar(
            range(last_it + 1),
            label=f"Computing {method.value} features",
            file=click.get_text_stream("stderr"),
        ) as its:
            for it in its:
                wanted = missing[it]
                # Gaussian scales and the originals don't depend on the
                # previous scale, nothing to carry over
                if not wanted and (it == 0 or method == Method.GAUSSIAN):
                    continue
                tasks = [
                    ScaleTask(
                        source=source,
                        previous=previous,
                        it=it,
                        method=method,
                        params=self.params,
                        descriptors=wanted,
                        options=self.options,
                    )
                    for source, previous in zip(sources, states)
                ]
                results = self.run_tasks(tasks, executor)
                states = [image for image, _ in results]
                for descriptor in wanted:
                    rows = np.stack([features[descriptor] for _, features in results])
                    self.cache.store(self.key(method, it, descriptor), rows)
                    computed += 1

        return computed

    def table(self, method: Method, descriptor: Descriptor, it: int) -> FeatureTable:
        key = self.key(method, it, descriptor)
        rows = self.cache.load(key, len(self.dataset))
        if rows is None:
            self._ensure_method(method, [descriptor], it, executor=None)
            rows = self.cache.load(key, len(self.dataset))
        if rows is None:
            raise OSError(
                f"Could not read back cached features from {self.cache.path_for(key)}"
            )
        return FeatureTable.from_rows(rows, self.dataset, descriptor, it)

    def iter_tables(
        self, method: Method, descriptor: Descriptor, n_scales: int
    ) -> Iterator[FeatureTable]:
        """Tables for it = 0 .. n_scales, read one at a time"""
        for it in range(n_scales + 1):
            yield self.table(method, descriptor, it)

