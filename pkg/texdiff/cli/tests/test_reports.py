import pandas as pd
import pytest

from texdiff.classify import Accuracy, Classifier, SweepResult
from texdiff.descriptors import Descriptor
from texdiff.diffusion import Method
from texdiff.errors import DecodeError

from ..reports import (
    cell_gains,
    gain_report,
    results_frame,
    summary_frame,
    to_csv_bytes,
)


def sweep_result(baseline: float, means: list) -> SweepResult:
    return SweepResult(
        method=Method.NL,
        descriptor=Descriptor.CSLBP,
        classifier=Classifier.NB,
        baseline=Accuracy(baseline, 1.5),
        curve=tuple(Accuracy(m, 2.0) for m in means),
    )


def test_results_start_with_the_baseline() -> None:
    frame = results_frame([sweep_result(80, [81, 79])])
    assert frame["it"].tolist() == [0, 1, 2]
    assert frame["mean_acc"].tolist() == [80, 81, 79]
    assert frame["method"].tolist() == ["nl"] * 3


def test_csv_layout() -> None:
    text = to_csv_bytes(results_frame([sweep_result(80, [81.25])])).decode()
    assert text.splitlines() == [
        "method,descriptor,classifier,it,mean_acc,std_acc",
        "nl,cslbp,nb,0,80,1.5",
        "nl,cslbp,nb,1,81.25,2",
    ]


def test_summary_reports_the_best_iteration() -> None:
    frame = summary_frame([sweep_result(80, [81, 84, 84])])
    assert frame.to_dict("records") == [
        {
            "method": "nl",
            "descriptor": "cslbp",
            "classifier": "nb",
            "baseline": 80,
            "best": 84,
            "best_it": 2,
        }
    ]


def test_gains_match_the_sweep() -> None:
    result = sweep_result(80, [79, 84, 78])
    gains = cell_gains(results_frame([result]))
    row = gains.iloc[0]
    assert row["gain"] == pytest.approx(result.gain)
    assert row["best_it"] == result.best_it
    assert row["negative_its"] == 2


def test_report_sorts_every_dataset_together() -> None:
    report = gain_report(
        {
            "a": results_frame([sweep_result(80, [81])]),
            "b": results_frame([sweep_result(50, [60])]),
        }
    )
    assert report["dataset"].tolist() == ["b", "a"]


def test_that_incomplete_cells_are_rejected() -> None:
    frame = results_frame([sweep_result(80, [81])])
    with pytest.raises(DecodeError):
        cell_gains(frame[frame["it"] > 0])


def test_empty_frames_keep_their_columns() -> None:
    assert isinstance(results_frame([]), pd.DataFrame)
    assert list(summary_frame([]).columns)[-1] == "best_it"
