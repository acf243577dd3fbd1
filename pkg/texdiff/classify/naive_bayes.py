"""Gaussian naive Bayes"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from texdiff.errors import AlignmentError, ConfigurationError
from texdiff.image import FloatArray, IntArray

from .table import FeatureTable

VARIANCE_FLOOR = 1e-9


@dataclass(frozen=True, eq=False)
class NBModel:
    # shape (classes, features)
    means: FloatArray
    variances: FloatArray
    # shape (classes,)
    log_priors: FloatArray

    @property
    def class_count(self) -> int:
        return int(self.means.shape[0])

    @property
    def width(self) -> int:
        return int(self.means.shape[1])

    def log_likelihoods(self, queries: FloatArray) -> FloatArray:
        """Joint log likelihood of each query for each class, shape
        (queries, classes)"""
        columns = []
        for mean, variance in zip(self.means, self.variances):
            log_density = -0.5 * (
                np.log(2 * np.pi * variance) + (queries - mean) ** 2 / variance
            )
            columns.append(log_density.sum(axis=1))
        joint: FloatArray = np.stack(columns, axis=1) + self.log_priors
        return joint


def nb_train(train: FeatureTable) -> NBModel:
    counts = np.bincount(train.labels, minlength=train.class_count)
    missing = np.flatnonzero(counts == 0)
    if len(missing) > 0:
        raise ConfigurationError(
            f"Classes {missing.tolist()} have no training samples, naive Bayes "
            f"needs every class"
        )

    means = np.stack(
        [train.rows[train.labels == c].mean(axis=0) for c in range(train.class_count)]
    )
    variances = np.stack(
        [train.rows[train.labels == c].var(axis=0) for c in range(train.class_count)]
    )
    return NBModel(
        means=means,
        variances=np.maximum(variances, VARIANCE_FLOOR),
        log_priors=np.log(counts / counts.sum()),
    )


def nb_predict_many(model: NBModel, queries: FloatArray) -> IntArray:
    """Class with the highest posterior for each query, ties go to the
    smallest class id"""
    queries = np.atleast_2d(np.asarray(queries, dtype=np.float64))
    if queries.shape[1] != model.width:
        raise AlignmentError(
            f"Query has {queries.shape[1]} features, the model expects {model.width}"
        )
    predicted: IntArray = np.argmax(model.log_likelihoods(queries), axis=1)
    return predicted.astype(np.int64)


def nb_predict(model: NBModel, query: FloatArray) -> int:
    query = np.asarray(query, dtype=np.float64)
    if query.ndim != 1:
        raise AlignmentError(
            f"Expected a single feature vector, got shape {query.shape}"
        )
    return int(nb_predict_many(model, query[np.newaxis, :])[0])
