"""Monitoring and logging setup for the hadamard-gorenstein command line.

This module configures structured logging and keeps simple timing metrics for
the construction and verification steps. Log output always goes to stderr,
stdout carries the emitted point and report files.
"""

from collections.abc import Iterator
from contextlib import contextmanager
import logging
import sys
import time
from typing import Any

import structlog
from structlog.stdlib import LoggerFactory

from src.config import Config


def setup_logging(config: Config | None = None) -> None:
    """Setup structured logging configuration.

    Args:
        config: Configuration object
    """
    if config is None:
        config = Config.current()

    log_level = getattr(logging, config.LOG_LEVEL.upper(), logging.WARNING)

    renderer = (
        structlog.processors.JSONRenderer()
        if config.STRUCTURED_LOGGING
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            renderer,
        ],
        context_class=dict,
        logger_factory=LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(message)s"))

    root_logger = logging.getLogger()
    for existing in list(root_logger.handlers):
        if getattr(existing, "_hadamard_handler", False):
            root_logger.removeHandler(existing)
    handler._hadamard_handler = True
    root_logger.addHandler(handler)
    root_logger.setLevel(log_level)


def get_logger(name: str) -> Any:
    """Get a structured logger instance."""
    return structlog.get_logger(name)


class OperationMetrics:
    """Simple metrics collection for construction and verification steps."""

    def __init__(self):
        self.calls = 0
        self.successful_calls = 0
        self.failed_calls = 0
        self.total_duration = 0.0
        self.calls_by_operation: dict[str, int] = {}
        self.errors_by_type: dict[str, int] = {}

    def record(self, operation: str, success: bool, duration: float, error_type: str | None = None):
        """Record metrics for one operation."""
        self.calls += 1
        self.total_duration += duration
        self.calls_by_operation[operation] = self.calls_by_operation.get(operation, 0) + 1

        if success:
            self.successful_calls += 1
        else:
            self.failed_calls += 1
            if error_type:
                self.errors_by_type[error_type] = self.errors_by_type.get(error_type, 0) + 1

    def get_stats(self) -> dict[str, Any]:
        """Get current metrics statistics."""
        return {
            "total_calls": self.calls,
            "successful_calls": self.successful_calls,
            "failed_calls": self.failed_calls,
            "average_duration": self.total_duration / self.calls if self.calls > 0 else 0.0,
            "calls_by_operation": dict(self.calls_by_operation),
            "errors_by_type": dict(self.errors_by_type),
        }

    def reset(self):
        """Reset all metrics."""
        self.__init__()


# Global metrics instance
metrics = OperationMetrics()


def log_operation(
    operation: str,
    success: bool,
    duration: float,
    details: dict[str, Any] | None = None,
    error: Exception | None = None,
):
    """Log one operation with structured data."""
    logger = get_logger("hadamard.operations")

    log_data = {
        "operation": operation,
        "success": success,
        "duration_ms": duration * 1000,
        "details": details or {},
    }

    if error:
        log_data["error"] = str(error)
        log_data["error_type"] = type(error).__name__

    if success:
        logger.info("operation completed", **log_data)
    else:
        logger.error("operation failed", **log_data)


@contextmanager
def track_operation(operation: str, **details: Any) -> Iterator[None]:
    """Time a block, record it in the global metrics and log the outcome."""
    start = time.perf_counter()
    try:
        yield
    except Exception as e:
        duration = time.perf_counter() - start
        metrics.record(operation, False, duration, type(e).__name__)
        log_operation(operation, False, duration, details, e)
        raise
    duration = time.perf_counter() - start
    metrics.record(operation, True, duration)
    log_operation(operation, True, duration, details)


def initialize_monitoring(config: Config | None = None) -> dict[str, bool]:
    """Initialize logging and reset the metrics.

    Args:
        config: Configuration object
    """
    if config is None:
        config = Config.current()

    results = {"logging": False, "metrics": False}

    try:
        setup_logging(config)
        results["logging"] = True
        logging.getLogger(__name__).debug("Logging system initialized")
    except (OSError, ValueError, TypeError) as e:
        print(f"Failed to setup logging: {e}", file=sys.stderr)

    metrics.reset()
    results["metrics"] = True
    return results
