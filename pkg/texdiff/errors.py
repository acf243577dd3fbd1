"""Exceptions raised by texdiff, all of them are ValueErrors so callers that
only care about "bad input" can catch that"""


class DecodeError(ValueError):
    """A file could not be read or decoded"""


class FormatError(ValueError):
    """A file is not in one of the supported raster formats"""


class IngestionError(ValueError):
    """A dataset folder does not have the expected layout"""


class StratificationError(ValueError):
    """Folds can't be stratified with the given class sizes"""


class ParameterError(ValueError):
    """A numerical parameter is outside its valid range"""


class ShapeError(ValueError):
    """An image is too small for the requested operation"""


class AlignmentError(ValueError):
    """Two feature tables don't describe the same rows"""


class ConfigurationError(ValueError):
    """An experiment can't be run as configured"""


class NumericalError(ArithmeticError):
    """Non-finite values showed up mid-pipeline"""
