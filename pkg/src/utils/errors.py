from enum import IntEnum
from typing import Any, Optional


class ExitCode(IntEnum):
    OK = 0
    NEGATIVE = 1
    INPUT_ERROR = 2
    PATH_EXPLOSION = 3
    INCONSISTENCY = 4


class MatrixToolkitError(Exception):
    """Base class for all toolkit errors"""
    pass


class InvalidIndexError(MatrixToolkitError):
    """Raised when an index falls outside 1..n or repeats"""
    pass


class EmptyComplementError(MatrixToolkitError):
    """Raised when A(alpha) is requested for alpha = {1..n}"""
    pass


class NotSquareError(MatrixToolkitError):
    """Raised when a square matrix is required"""
    pass


class SingularMatrixError(MatrixToolkitError):
    """Raised when an inverse is requested for a singular matrix"""
    pass


class SizeLimitError(MatrixToolkitError):
    """Raised when an order exceeds an enumeration cap"""
    pass


class SizeTooSmallError(MatrixToolkitError):
    """Raised when a band definition needs a larger order"""
    pass


class NotZMatrixError(MatrixToolkitError):
    """Raised when an operation requires a Z-matrix"""
    pass


class NotMMatrixError(MatrixToolkitError):
    """Raised when an operation requires an M-matrix"""
    pass


class NotTridiagonalError(MatrixToolkitError):
    """Raised when an operation requires a tridiagonal matrix"""
    pass


class InvalidPathError(MatrixToolkitError):
    """Raised when a vertex sequence is not a path of the digraph"""
    pass


class PathExplosionError(MatrixToolkitError):
    """Raised when simple path enumeration exceeds its cap"""

    def __init__(self, cap: int, source: int, target: int):
        super().__init__(
            f"More than {cap} simple paths from v{source} to v{target}; "
            f"raise the path cap or reject the instance"
        )
        self.cap = cap
        self.source = source
        self.target = target


class InternalInconsistencyError(MatrixToolkitError):
    """Raised when independently computed verdicts disagree"""

    def __init__(self, message: str, details: Optional[Any] = None):
        super().__init__(message)
        self.details = details


class MatrixParseError(MatrixToolkitError):
    """Raised when a matrix file is malformed"""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        location = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{location}{message}")
        self.line = line
        self.column = column


class GeneratorSpecError(MatrixToolkitError):
    """Raised when a generator spec is invalid"""
    pass


class CheckpointMismatchError(MatrixToolkitError):
    """Raised when a checkpoint belongs to a different hunt"""
    pass
