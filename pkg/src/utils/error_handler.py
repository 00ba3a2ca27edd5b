from .logging_config import get_logger, DebugCategory
from .errors import (
    ExitCode,
    MatrixToolkitError,
    MatrixParseError,
    SizeLimitError,
    SizeTooSmallError,
    InvalidIndexError,
    NotSquareError,
    GeneratorSpecError,
    CheckpointMismatchError,
    SingularMatrixError,
    NotZMatrixError,
    NotMMatrixError,
    NotTridiagonalError,
    PathExplosionError,
    InternalInconsistencyError,
)

_INPUT_ERRORS = (
    MatrixParseError,
    SizeLimitError,
    SizeTooSmallError,
    InvalidIndexError,
    NotSquareError,
    GeneratorSpecError,
    CheckpointMismatchError,
    OSError,
)

_NEGATIVE_OUTCOMES = (
    SingularMatrixError,
    NotZMatrixError,
    NotMMatrixError,
    NotTridiagonalError,
)


class ErrorHandler:
    def __init__(self):
        self.logger = get_logger(__name__)

    def handle_error(self, error: Exception, context: str) -> ExitCode:
        """Map a failure to the CLI exit code that reports it

        Args:
            error: The exception that occurred
            context: Description of where the error occurred

        Returns:
            ExitCode: Process exit status for the failure
        """
        if isinstance(error, _INPUT_ERRORS):
            self.logger.error(
                f"Invalid input in {context}: {str(error)}",
                extra={"category": DebugCategory.CLI.value}
            )
            return ExitCode.INPUT_ERROR

        if isinstance(error, _NEGATIVE_OUTCOMES):
            self.logger.info(
                f"Negative outcome in {context}: {str(error)}",
                extra={"category": DebugCategory.CLI.value}
            )
            return ExitCode.NEGATIVE

        if isinstance(error, PathExplosionError):
            self.logger.error(
                f"Path enumeration cap {error.cap} exceeded in {context}",
                extra={"category": DebugCategory.CLI.value}
            )
            return ExitCode.PATH_EXPLOSION

        if isinstance(error, InternalInconsistencyError):
            self.logger.critical(
                f"Internal inconsistency in {context}: {str(error)}",
                extra={"category": DebugCategory.CLI.value}
            )
            return ExitCode.INCONSISTENCY

        if isinstance(error, MatrixToolkitError):
            self.logger.error(
                f"Unhandled toolkit error in {context}: {str(error)}",
                extra={"category": DebugCategory.CLI.value}
            )
            return ExitCode.INPUT_ERROR

        # Unknown errors
        self.logger.error(
            f"Unexpected error in {context}: {error.__class__.__name__}",
            extra={"category": DebugCategory.CLI.value}
        )
        return ExitCode.INCONSISTENCY
