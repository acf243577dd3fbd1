import numpy as np
import pytest

from texdiff.descriptors import Descriptor
from texdiff.diffusion import DEFAULT_PARAMS, Method
from texdiff.errors import AlignmentError, ConfigurationError
from texdiff.image import Dataset, Image

from ..sweep import SweepResult, feature_tables, sweep, sweep_tables
from ..validation import Accuracy, Classifier
from .tables import make_dataset, make_table, noise_dataset


def constant_dataset() -> Dataset:
    return make_dataset(
        [
            [Image(np.full((6, 6), 0.2)) for _ in range(4)],
            [Image(np.full((6, 6), 0.7)) for _ in range(4)],
        ]
    )


def result(means: list, baseline: float = 50) -> SweepResult:
    return SweepResult(
        method=Method.PM,
        descriptor=Descriptor.LBP,
        classifier=Classifier.KNN1,
        baseline=Accuracy(baseline, 0),
        curve=tuple(Accuracy(m, 0) for m in means),
    )


@pytest.mark.parametrize("method", list(Method))
def test_constant_datasets_stay_at_the_baseline(method: Method) -> None:
    outcome = sweep(
        constant_dataset(), method, Descriptor.LBP, Classifier.KNN1, 5, DEFAULT_PARAMS
    )
    assert outcome.curve == (outcome.baseline,) * 5
    assert outcome.gain == 0


def test_one_table_per_scale_plus_the_original() -> None:
    tables = list(
        feature_tables(noise_dataset(), Method.PM, Descriptor.LBPV, 7, DEFAULT_PARAMS)
    )
    assert [t.it for t in tables] == list(range(8))
    assert all(t.width == 10 for t in tables)


def test_sweep_curve_has_one_point_per_scale() -> None:
    outcome = sweep(
        noise_dataset(),
        Method.GAUSSIAN,
        Descriptor.LBP,
        Classifier.NB,
        6,
        DEFAULT_PARAMS,
    )
    assert outcome.n_scales == 6
    assert 1 <= outcome.best_it <= 6
    for it in range(7):
        accuracy = outcome.accuracy_at(it)
        assert 0 <= accuracy.mean <= 100


def test_every_classifier_shares_the_same_tables() -> None:
    tables = list(
        feature_tables(noise_dataset(), Method.FBR, Descriptor.LBP, 3, DEFAULT_PARAMS)
    )
    results = sweep_tables(tables, Method.FBR, list(Classifier))
    assert set(results) == set(Classifier)
    for classifier, outcome in results.items():
        assert outcome.classifier == classifier
        assert outcome.n_scales == 3


def test_best_iteration_prefers_the_earliest_tie() -> None:
    outcome = result([40, 60, 55, 60])
    assert outcome.best_it == 2
    assert outcome.best == Accuracy(60, 0)
    assert outcome.gain == 10


def test_best_iteration_can_lose_to_the_baseline() -> None:
    outcome = result([10, 20], baseline=30)
    assert outcome.best_it == 2
    assert outcome.gain == -10


def test_that_tables_must_come_in_order() -> None:
    tables = [
        make_table([[0], [1]], [0, 1], it=0),
        make_table([[0], [1]], [0, 1], it=2),
    ]
    with pytest.raises(AlignmentError):
        sweep_tables(tables, Method.PM, [Classifier.KNN1])


def test_that_the_original_table_comes_first() -> None:
    with pytest.raises(AlignmentError):
        sweep_tables([make_table([[0], [1]], [0, 1], it=1)], Method.PM, [])
    with pytest.raises(ConfigurationError):
        sweep_tables([], Method.PM, [Classifier.KNN1])


def test_that_sweeps_need_a_scale() -> None:
    with pytest.raises(ConfigurationError):
        result([])
