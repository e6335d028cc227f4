"""Exception types raised across the package."""


class ClusteringError(ValueError):
    """Base class for all input and state errors raised by this package."""

    #: Stable short name used in machine-readable CLI error lines.
    code = "ClusteringError"


class ConstantSeriesError(ClusteringError):
    code = "ConstantSeries"

    def __init__(self, message: str, rows: list[int] | None = None):
        super().__init__(message)
        self.rows = list(rows or [])


class LengthMismatchError(ClusteringError):
    code = "LengthMismatch"


class EmptyDatasetError(ClusteringError):
    code = "EmptyDataset"


class ConventionError(ClusteringError):
    """Dataset normalized under a convention the operation cannot use."""

    code = "ConventionMismatch"


class KTooLargeError(ClusteringError):
    code = "KTooLarge"


class ExplicitShapeMismatchError(ClusteringError):
    code = "ExplicitShapeMismatch"


class ZeroNormPrototypeError(ClusteringError):
    code = "ZeroNormPrototype"


class SizeMismatchError(ClusteringError):
    code = "SizeMismatch"


class EmptyListError(ClusteringError):
    code = "EmptyList"


class AmbiguousClusterIdentityError(ClusteringError):
    code = "AmbiguousClusterIdentity"


class ParseError(ClusteringError):
    code = "ParseError"

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
