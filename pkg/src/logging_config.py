"""
Logging configuration for the transversal toolkit.

- Console output goes to stderr; stdout is reserved for reports.
- Optional rotating file logs (app.log, error.log), text or JSON.
- Structured extras (seed, n, resample_count, duration_ms) survive into JSON.
"""

import json
import logging
import logging.handlers
import sys
import time
from datetime import datetime, timezone
from functools import wraps
from pathlib import Path
from typing import Any, Dict

ROOT_LOGGER = "transversal"

# Extra fields copied into JSON records when present
STRUCTURED_FIELDS = ("seed", "n", "trial", "resample_count", "rounds_cap", "duration_ms", "command")


class JSONFormatter(logging.Formatter):
    """Formats records as one JSON object per line."""

    def format(self, record: logging.LogRecord) -> str:
        log_data: Dict[str, Any] = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno,
            "message": record.getMessage(),
        }

        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        for name in STRUCTURED_FIELDS:
            if hasattr(record, name):
                log_data[name] = getattr(record, name)

        return json.dumps(log_data)


def setup_logging(
    log_level: str = "WARNING",
    log_dir: str = "logs",
    enable_console: bool = True,
    enable_file: bool = False,
    json_format: bool = False,
) -> logging.Logger:
    """
    Configure the toolkit's logger tree.

    Args:
        log_level: Minimum level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_dir: Directory for log files (created if missing)
        enable_console: Attach a stderr handler
        enable_file: Attach rotating file handlers
        json_format: Use JSON for file logs

    Returns:
        The configured root logger of the toolkit
    """
    logger = logging.getLogger(ROOT_LOGGER)
    level = getattr(logging, log_level.upper())
    logger.setLevel(logging.DEBUG if enable_file else level)
    logger.handlers.clear()

    if enable_console:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(level)
        console_handler.setFormatter(
            logging.Formatter(
                "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
                datefmt="%Y-%m-%d %H:%M:%S",
            )
        )
        logger.addHandler(console_handler)

    if enable_file:
        Path(log_dir).mkdir(parents=True, exist_ok=True)
        if json_format:
            file_format: logging.Formatter = JSONFormatter()
        else:
            file_format = logging.Formatter(
                "%(asctime)s - %(name)s - %(levelname)s - "
                "%(module)s:%(funcName)s:%(lineno)d - %(message)s",
                datefmt="%Y-%m-%d %H:%M:%S",
            )

        file_handler = logging.handlers.RotatingFileHandler(
            filename=f"{log_dir}/app.log",
            maxBytes=10 * 1024 * 1024,  # 10MB
            backupCount=5,
            encoding="utf-8",
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(file_format)
        logger.addHandler(file_handler)

        error_handler = logging.handlers.RotatingFileHandler(
            filename=f"{log_dir}/error.log",
            maxBytes=10 * 1024 * 1024,
            backupCount=5,
            encoding="utf-8",
        )
        error_handler.setLevel(logging.ERROR)
        error_handler.setFormatter(file_format)
        logger.addHandler(error_handler)

    logger.debug(
        f"Logging configured: level={log_level}, console={enable_console}, "
        f"file={enable_file}, json={json_format}"
    )
    return logger


def get_logger(name: str) -> logging.Logger:
    """Child logger of the toolkit root, typically get_logger(__name__)."""
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")


def log_performance(logger: logging.Logger):
    """Decorator logging the wall time of each call at DEBUG."""

    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            start_time = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception as exc:
                duration_ms = (time.perf_counter() - start_time) * 1000
                logger.error(
                    f"{func.__name__} failed: {exc}",
                    extra={"duration_ms": duration_ms},
                )
                raise
            duration_ms = (time.perf_counter() - start_time) * 1000
            logger.debug(
                f"{func.__name__} completed",
                extra={"duration_ms": duration_ms},
            )
            return result

        return wrapper

    return decorator


class LogContext:
    """
    Context manager logging the start, end and duration of an operation.

    Failures are logged at `failure_level` with the traceback attached.

    Example:
        >>> with LogContext(logger, "solve family", seed=0):
        ...     outcome = find_transversal_mt(family, seed=0)
    """

    def __init__(self, logger: logging.Logger, operation: str, failure_level: int = logging.ERROR, **kwargs):
        self.logger = logger
        self.operation = operation
        self.failure_level = failure_level
        self.context = kwargs
        self.start_time = 0.0

    def __enter__(self):
        self.start_time = time.perf_counter()
        self.logger.info(f"Starting: {self.operation}", extra=self.context)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        duration_ms = (time.perf_counter() - self.start_time) * 1000
        if exc_type is None:
            self.logger.info(
                f"Completed: {self.operation}",
                extra={**self.context, "duration_ms": duration_ms},
            )
        else:
            self.logger.log(
                self.failure_level,
                f"Failed: {self.operation} - {exc_val}",
                exc_info=(exc_type, exc_val, exc_tb),
                extra={**self.context, "duration_ms": duration_ms},
            )
        return False
