"""
Logging configuration and error hierarchy for chowgen.

This module provides:
- Structured logging setup with console and file handlers
- Custom exception hierarchy for algebra, input and verification errors
- Progress logging for long verification sweeps
"""

import logging
import sys
import time
from typing import Any, Dict, Optional, Sequence


class ChowgenError(Exception):
    """Base error for all chowgen operations."""

    def __init__(self, message: str, suggestion: Optional[str] = None):
        self.message = message
        self.suggestion = suggestion
        super().__init__(message)

    def __str__(self) -> str:
        if self.suggestion:
            return f"{self.message} (Suggestion: {self.suggestion})"
        return self.message


class UserError(ChowgenError):
    """Error caused by caller input."""

    pass


class InvalidRError(UserError):
    """Raised when r is outside the range the presentation is stated for."""

    def __init__(self, r: int, minimum: int = 1):
        self.r = r
        self.minimum = minimum
        super().__init__(
            f"r must be at least {minimum}, got {r}",
            suggestion="The presentation is stated for positive r",
        )


class InvalidArgumentError(UserError):
    """Error when an argument other than r is invalid."""

    pass


class AlgebraError(ChowgenError):
    """Error raised by an exact algebra operation."""

    def __init__(
        self,
        message: str,
        technical_details: Optional[str] = None,
        suggestion: Optional[str] = None,
    ):
        self.technical_details = technical_details
        super().__init__(message, suggestion)


class NotDivisibleError(AlgebraError):
    """Raised when exact division has no integer polynomial quotient."""

    pass


class NonzeroRemainderError(AlgebraError):
    """Raised when division by a linear binomial l_i - l_j leaves a remainder."""

    pass


class NotMonicError(AlgebraError):
    """Raised when a univariate modulus does not have leading coefficient 1."""

    pass


class ForeignVariableError(AlgebraError):
    """Raised when a polynomial mentions variables outside the allowed set."""

    pass


class NotSymmetricError(AlgebraError):
    """Raised when a polynomial is not invariant under permutations of l0, l1, l2."""

    pass


class NonUnitConstantError(AlgebraError):
    """Raised when a series denominator has a constant term other than 1 or -1."""

    pass


class VerificationError(ChowgenError):
    """Error raised when a certificate or golden comparison fails."""

    pass


class MismatchReport(VerificationError):
    """Lists the table cells whose computed value differs from the golden corpus."""

    def __init__(self, mismatches: Sequence[Any]):
        self.mismatches = list(mismatches)
        lines = [f"{len(self.mismatches)} table cell(s) differ from the golden corpus"]
        lines.extend(f"  {m}" for m in self.mismatches)
        super().__init__("\n".join(lines))


class ProgressLogger:
    """Logger for sweep progress updates."""

    def __init__(self, logger: logging.Logger, total_steps: Optional[int] = None):
        self.logger = logger
        self.total_steps = total_steps
        self.current_step = 0
        self._started = time.monotonic()

    def update(self, step_name: str, message: Optional[str] = None) -> None:
        """Record one finished step."""
        self.current_step += 1
        progress = (
            min(100.0, (self.current_step / self.total_steps) * 100) if self.total_steps else 0.0
        )

        if self.total_steps and self.current_step >= self.total_steps:
            self.logger.info(f"Sweep complete in {self.elapsed_seconds:.2f}s")
            return

        msg = f"[{self.current_step}/{self.total_steps or '?'}] {step_name} - Progress: {progress:.1f}%"
        if message:
            msg += f" - {message}"
        self.logger.info(msg)

    @property
    def elapsed_seconds(self) -> float:
        return time.monotonic() - self._started


def setup_logging(
    level: int | str = logging.WARNING,
    log_file: Optional[str] = None,
    format_string: Optional[str] = None,
) -> logging.Logger:
    """
    Set up logging configuration for chowgen.

    Logs always go to stderr so command output on stdout stays byte-stable.

    Args:
        level: Logging level (default: WARNING)
        log_file: Optional path to log file
        format_string: Optional custom format string

    Returns:
        Configured logger instance
    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING

    logger = logging.getLogger("chowgen")
    logger.setLevel(level)
    logger.handlers.clear()
    logger.propagate = False

    fmt = format_string or "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    datefmt = "%Y-%m-%d %H:%M:%S"
    formatter = logging.Formatter(fmt, datefmt=datefmt)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        file_handler = logging.FileHandler(str(log_file))
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger for a specific module.

    Args:
        name: Module name (e.g., 'algebra.ring', 'cli')

    Returns:
        Logger instance for the module
    """
    return logging.getLogger(f"chowgen.{name}")


def log_error(logger: logging.Logger, error: Exception, include_traceback: bool = True) -> None:
    """Log an error with appropriate formatting.

    Args:
        logger: Logger instance
        error: Exception to log
        include_traceback: Whether to include stack trace
    """
    logger.error(f"Error occurred: {error.message if isinstance(error, ChowgenError) else error}")

    if isinstance(error, ChowgenError) and error.suggestion:
        logger.info(f"Suggestion: {error.suggestion}")

    if isinstance(error, AlgebraError) and error.technical_details:
        logger.debug(f"Technical details: {error.technical_details}")

    if include_traceback:
        import traceback

        logger.debug("\n".join(traceback.format_exception(type(error), error, error.__traceback__)))


def log_sweep_start(logger: logging.Logger, command: str, **kwargs: Any) -> None:
    """Log the start of a long-running command.

    Args:
        logger: Logger instance
        command: Command name
        **kwargs: Additional metadata
    """
    logger.info("=" * 60)
    logger.info(f"Starting {command}")
    for key, value in kwargs.items():
        logger.info(f"  {key}: {value}")
    logger.info("=" * 60)


def log_sweep_complete(
    logger: logging.Logger,
    success: bool,
    duration_seconds: float,
    **kwargs: Dict[str, Any],
) -> None:
    """Log the completion of a long-running command.

    Args:
        logger: Logger instance
        success: Whether every check passed
        duration_seconds: Duration in seconds
        **kwargs: Additional metadata
    """
    status = "SUCCESS" if success else "FAILED"
    logger.info("=" * 60)
    logger.info(f"{status} - completed in {duration_seconds:.2f}s")
    for key, value in kwargs.items():
        logger.info(f"  {key}: {value}")
    logger.info("=" * 60)


root_logger = setup_logging()
