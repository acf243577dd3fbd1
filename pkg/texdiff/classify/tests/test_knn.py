import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from texdiff.errors import AlignmentError, ParameterError

from ..knn import knn_predict, knn_predict_many
from .tables import make_table


def test_query_equal_to_a_training_row() -> None:
    train = make_table([[0, 1], [3, 3], [5, 0]], [0, 1, 2])
    assert knn_predict(train, np.array([3, 3])) == 1


def test_nearest_point_wins() -> None:
    train = make_table([[0], [10]], [0, 1])
    assert knn_predict(train, np.array([4])) == 0


def test_equidistant_neighbours_go_to_the_earlier_row() -> None:
    assert knn_predict(make_table([[0], [10]], [1, 0]), np.array([5])) == 1
    assert knn_predict(make_table([[10], [0]], [0, 1]), np.array([5])) == 0


def test_majority_vote() -> None:
    train = make_table([[0], [1], [2], [100]], [1, 1, 0, 0])
    assert knn_predict(train, np.array([0.5]), k=3) == 1


def test_tied_votes_go_to_the_smallest_label() -> None:
    train = make_table([[0], [1], [100]], [1, 0, 0])
    assert knn_predict(train, np.array([0]), k=2) == 0


def test_that_dimensions_must_match() -> None:
    with pytest.raises(AlignmentError):
        knn_predict(make_table([[0, 1]], [0]), np.array([1, 2, 3]))


def test_that_k_is_bounded_by_the_training_set() -> None:
    train = make_table([[0], [1]], [0, 1])
    for k in (0, 3):
        with pytest.raises(ParameterError):
            knn_predict(train, np.array([0]), k=k)


def test_that_empty_training_sets_are_rejected() -> None:
    empty = make_table([[0], [1]], [0, 1])
    empty = empty.subset(np.zeros(2, dtype=bool))
    with pytest.raises(ParameterError):
        knn_predict(empty, np.array([0]))


@given(
    arrays(np.int64, (6, 3), elements=st.integers(0, 1000)),
    arrays(np.int64, (4, 3), elements=st.integers(0, 1000)),
    st.sampled_from([0.5, 2.0, 4.0]),
)
def test_scaling_every_vector_keeps_predictions(
    rows: np.ndarray, queries: np.ndarray, factor: float
) -> None:
    labels = [0, 1, 2, 0, 1, 2]
    rows, queries = rows.astype(np.float64), queries.astype(np.float64)
    original = knn_predict_many(make_table(rows, labels), queries)
    scaled = knn_predict_many(make_table(factor * rows, labels), factor * queries)
    assert np.array_equal(original, scaled)
