"""CSV outputs and the gain report"""

import io
from pathlib import Path
from typing import Dict, Iterable, List

import numpy as np
import pandas as pd

from texdiff.classify import FeatureTable, SweepResult
from texdiff.errors import DecodeError

CSV_FLOAT_FORMAT = "%.6g"

RESULT_COLUMNS = ["method", "descriptor", "classifier", "it", "mean_acc", "std_acc"]
SUMMARY_COLUMNS = ["method", "descriptor", "classifier", "baseline", "best", "best_it"]
CELL_COLUMNS = ["method", "descriptor", "classifier"]


def to_csv_bytes(frame: pd.DataFrame) -> bytes:
    text: str = frame.to_csv(index=False, float_format=CSV_FLOAT_FORMAT)
    return text.encode("utf-8")


def results_frame(results: Iterable[SweepResult]) -> pd.DataFrame:
    """One row per iteration of each sweep, it = 0 is the baseline"""
    records = [
        {
            "method": r.method.value,
            "descriptor": r.descriptor.value,
            "classifier": r.classifier.value,
            "it": it,
            "mean_acc": r.accuracy_at(it).mean,
            "std_acc": r.accuracy_at(it).std,
        }
        for r in results
        for it in range(r.n_scales + 1)
    ]
    return pd.DataFrame.from_records(records, columns=RESULT_COLUMNS)


def summary_frame(results: Iterable[SweepResult]) -> pd.DataFrame:
    records = [
        {
            "method": r.method.value,
            "descriptor": r.descriptor.value,
            "classifier": r.classifier.value,
            "baseline": r.baseline.mean,
            "best": r.best.mean,
            "best_it": r.best_it,
        }
        for r in results
    ]
    return pd.DataFrame.from_records(records, columns=SUMMARY_COLUMNS)


def feature_header(width: int) -> List[str]:
    return ["label", "descriptor_id", "it", *(f"v{i}" for i in range(width))]


def feature_frame(table: FeatureTable) -> pd.DataFrame:
    frame = pd.DataFrame(table.rows, columns=[f"v{i}" for i in range(table.width)])
    frame.insert(0, "it", table.it)
    frame.insert(0, "descriptor_id", table.descriptor.value)
    frame.insert(0, "label", table.labels)
    return frame


def features_csv(tables: Iterable[FeatureTable]) -> bytes:
    """Feature rows of several tables of the same descriptor, one after the
    other, under a single header"""
    buffer = io.StringIO()
    header = True
    for table in tables:
        feature_frame(table).to_csv(
            buffer, index=False, header=header, float_format=CSV_FLOAT_FORMAT
        )
        header = False
    return buffer.getvalue().encode("utf-8")


def read_results(path: Path) -> pd.DataFrame:
    frame = pd.read_csv(path)
    missing = [c for c in RESULT_COLUMNS if c not in frame.columns]
    if missing:
        raise DecodeError(f"{path} is not a results file, missing columns {missing}")
    return frame


def cell_gains(results: pd.DataFrame) -> pd.DataFrame:
    """baseline, best, best_it, gain and the number of iterations that did
    worse than the baseline, for each (method, descriptor, classifier)"""
    records = []
    for (method, descriptor, classifier), cell in results.groupby(
        CELL_COLUMNS, sort=False
    ):
        baseline_rows = cell[cell["it"] == 0]
        curve = cell[cell["it"] > 0].sort_values("it", kind="mergesort")
        if baseline_rows.empty or curve.empty:
            raise DecodeError(
                f"Incomplete results for {method}, {descriptor}, {classifier}"
            )
        baseline = float(baseline_rows["mean_acc"].iloc[0])
        accuracies = curve["mean_acc"].to_numpy()
        best_index = int(np.argmax(accuracies))
        best = float(accuracies[best_index])
        records.append(
            {
                "method": method,
                "descriptor": descriptor,
                "classifier": classifier,
                "baseline": baseline,
                "best": best,
                "best_it": int(curve["it"].iloc[best_index]),
                "gain": best - baseline,
                "negative_its": int(np.sum(accuracies < baseline)),
            }
        )
    return pd.DataFrame.from_records(records)


def gain_report(results_by_dataset: Dict[str, pd.DataFrame]) -> pd.DataFrame:
    """Gains of every cell of every dataset, best first"""
    frames = []
    for dataset, results in results_by_dataset.items():
        gains = cell_gains(results)
        gains.insert(0, "dataset", dataset)
        frames.append(gains)
    report = pd.concat(frames, ignore_index=True)
    return report.sort_values("gain", ascending=False, kind="mergesort").reset_index(
        drop=True
    )


def format_gain_report(report: pd.DataFrame) -> str:
    lines = []
    for dataset, cells in report.groupby("dataset", sort=False):
        lines.append(f"{dataset}")
        for cell in cells.itertuples(index=False):
            flag = ""
            if cell.negative_its > 0:
                flag = f"  ! {cell.negative_its} iteration(s) below the baseline"
            lines.append(
                f"  {cell.method:>8} + {cell.descriptor:<6} {cell.classifier:<4} "
                f"baseline {cell.baseline:6.2f}  best {cell.best:6.2f} "
                f"(it {cell.best_it:>3})  gain {cell.gain:+6.2f}{flag}"
            )
    return "\n".join(lines)
