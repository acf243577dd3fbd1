from __future__ import annotations

from enum import Enum
from typing import Callable, Dict, List, NamedTuple, Union

import numpy as np

from texdiff.errors import ConfigurationError
from texdiff.image import IntArray

from .knn import knn_predict_many
from .naive_bayes import nb_predict_many, nb_train
from .table import FeatureTable


class Classifier(str, Enum):
    KNN1 = "knn1"
    NB = "nb"


# Trains on the first table and predicts the labels of the rows of the second
Predictor = Callable[[FeatureTable, FeatureTable], IntArray]


def predict_knn1(train: FeatureTable, test: FeatureTable) -> IntArray:
    return knn_predict_many(train, test.rows, k=1)


def predict_nb(train: FeatureTable, test: FeatureTable) -> IntArray:
    return nb_predict_many(nb_train(train), test.rows)


PREDICTORS: Dict[Classifier, Predictor] = {
    Classifier.KNN1: predict_knn1,
    Classifier.NB: predict_nb,
}


class Accuracy(NamedTuple):
    """Mean and sample standard deviation of the per-fold accuracies, in
    percent"""

    mean: float
    std: float

    def __str__(self) -> str:
        return format_accuracy(self.mean, self.std)


def format_accuracy(mean: float, std: float) -> str:
    return f"{mean:.2f}({std:.2f})"


def fold_accuracies(
    table: FeatureTable, classifier: Union[Classifier, Predictor]
) -> List[float]:
    if isinstance(classifier, str):
        predict: Predictor = PREDICTORS[Classifier(classifier)]
    else:
        predict = classifier
    if table.folds < 2:
        raise ConfigurationError(
            f"Cross validation needs at least 2 folds, got {table.folds}"
        )

    accuracies = []
    for fold in range(table.folds):
        in_fold = table.fold_of == fold
        if not in_fold.any():
            raise ConfigurationError(f"Fold {fold} is empty")
        test = table.subset(in_fold)
        predicted = predict(table.subset(~in_fold), test)
        accuracies.append(100 * float(np.mean(predicted == test.labels)))

    return accuracies


def cross_validate(
    table: FeatureTable, classifier: Union[Classifier, Predictor]
) -> Accuracy:
    """Each fold is classified by a model trained on all the other folds"""
    accuracies = fold_accuracies(table, classifier)
    return Accuracy(
        mean=float(np.mean(accuracies)), std=float(np.std(accuracies, ddof=1))
    )
