"""k nearest neighbours with the Euclidean distance"""

import numpy as np
from scipy.spatial import distance

from texdiff.errors import AlignmentError, ParameterError
from texdiff.image import FloatArray, IntArray

from .table import FeatureTable


def knn_predict_many(train: FeatureTable, queries: FloatArray, k: int = 1) -> IntArray:
    """Predicted labels of each query row. Among equidistant neighbours the
    earliest training row wins, a tied vote goes to the smallest label"""
    queries = np.atleast_2d(np.asarray(queries, dtype=np.float64))
    if len(train) == 0:
        raise ParameterError("Can't classify against an empty training set")
    if not 1 <= k <= len(train):
        raise ParameterError(f"k must be in [1, {len(train)}], got {k}")
    if queries.shape[1] != train.width:
        raise AlignmentError(
            f"Query has {queries.shape[1]} features, training rows have {train.width}"
        )

    # squared distances have the same ordering and are computed exactly per pair
    distances = distance.cdist(queries, train.rows, "sqeuclidean")
    if k == 1:
        predicted: IntArray = train.labels[np.argmin(distances, axis=1)]
        return predicted

    nearest = np.argsort(distances, axis=1, kind="stable")[:, :k]
    votes = np.stack(
        [
            np.bincount(train.labels[row], minlength=train.class_count)
            for row in nearest
        ]
    )
    predicted = np.argmax(votes, axis=1).astype(np.int64)
    return predicted


def knn_predict(train: FeatureTable, query: FloatArray, k: int = 1) -> int:
    query = np.asarray(query, dtype=np.float64)
    if query.ndim != 1:
        raise AlignmentError(
            f"Expected a single feature vector, got shape {query.shape}"
        )
    return int(knn_predict_many(train, query[np.newaxis, :], k)[0])
