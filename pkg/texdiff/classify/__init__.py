"""Classification of feature tables and the per-iteration accuracy sweep"""

from .knn import knn_predict, knn_predict_many
from .naive_bayes import NBModel, nb_predict, nb_predict_many, nb_train
from .sweep import SweepResult, feature_tables, sweep, sweep_tables
from .table import FeatureTable, concat_features
from .validation import (
    PREDICTORS,
    Accuracy,
    Classifier,
    cross_validate,
    fold_accuracies,
    format_accuracy,
)
