#!/usr/bin/env python3
"""
Structured Logging Framework for braidrep

This module provides a unified logging interface with structured JSON logs,
run correlation, and centralized configuration. Records go to stderr so that
command output on stdout stays machine-readable.
"""

import json
import logging
import socket
import sys
import time
import traceback
import uuid
from pathlib import Path
from typing import Any, Dict, Optional, Union

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))
from src.core import config

LOG_FORMAT = "%(message)s"
HOSTNAME = socket.gethostname()

# One id per process so records from all modules of a run can be joined
RUN_ID = str(uuid.uuid4())


class StructuredLogger:
    """
    Enhanced logger that outputs structured JSON logs with consistent fields.
    """

    def __init__(
        self,
        name: str,
        component: Optional[str] = None,
        log_dir: Optional[str] = None,
        log_level: Union[str, int, None] = None,
        run_id: Optional[str] = None,
    ):
        """
        Initialize the structured logger.

        Args:
            name: Logger name
            component: Optional component identifier (cyclo, rep, chars, ...)
            log_dir: Optional directory for log files
            log_level: Logging level (INFO, DEBUG, etc); defaults to config.LOG_LEVEL
            run_id: Optional correlation id; defaults to the process-wide RUN_ID
        """
        self.name = name
        self.component = component or "braidrep"
        self.run_id = run_id or RUN_ID

        if log_level is None:
            log_level = config.LOG_LEVEL
        if isinstance(log_level, int):
            numeric_level = log_level
        else:
            numeric_level = getattr(logging, str(log_level).upper(), logging.WARNING)

        self.logger = logging.getLogger(name)
        self.logger.setLevel(numeric_level)
        self.logger.propagate = False

        if self.logger.handlers:
            self.logger.handlers.clear()

        log_dir = log_dir or config.LOG_DIR
        if log_dir:
            log_path = Path(log_dir)
            log_path.mkdir(exist_ok=True, parents=True)

            file_handler = logging.FileHandler(
                log_path / f"{name.lower().replace(' ', '_')}.log"
            )
            file_handler.setLevel(numeric_level)
            file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
            self.logger.addHandler(file_handler)

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(numeric_level)
        console_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        self.logger.addHandler(console_handler)

    def _format_log(
        self,
        level: str,
        message: str,
        context: Optional[Dict[str, Any]] = None,
        error: Optional[BaseException] = None,
        suite: Optional[str] = None,
    ) -> str:
        """
        Format log entry as JSON with consistent fields.

        Args:
            level: Log level
            message: Log message
            context: Optional contextual data
            error: Optional exception
            suite: Optional verification suite name

        Returns:
            Formatted JSON log string
        """
        log_data = {
            "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
            "level": level,
            "logger": self.name,
            "component": self.component,
            "run_id": self.run_id,
            "message": message,
            "hostname": HOSTNAME,
        }

        if suite:
            log_data["suite"] = suite

        if context:
            log_data["context"] = context

        if error:
            log_data["error"] = {
                "type": error.__class__.__name__,
                "message": str(error),
                "traceback": traceback.format_exc(),
            }

        return json.dumps(log_data, default=str)

    def debug(self, message: str, context: Optional[Dict[str, Any]] = None,
              suite: Optional[str] = None) -> None:
        """Log at DEBUG level."""
        if self.logger.isEnabledFor(logging.DEBUG):
            self.logger.debug(self._format_log("DEBUG", message, context, None, suite))

    def info(self, message: str, context: Optional[Dict[str, Any]] = None,
             suite: Optional[str] = None) -> None:
        """Log at INFO level."""
        if self.logger.isEnabledFor(logging.INFO):
            self.logger.info(self._format_log("INFO", message, context, None, suite))

    def warning(self, message: str, context: Optional[Dict[str, Any]] = None,
                suite: Optional[str] = None) -> None:
        """Log at WARNING level."""
        self.logger.warning(self._format_log("WARNING", message, context, None, suite))

    def error(
        self,
        message: str,
        error: Optional[BaseException] = None,
        context: Optional[Dict[str, Any]] = None,
        suite: Optional[str] = None,
    ) -> None:
        """Log at ERROR level."""
        self.logger.error(self._format_log("ERROR", message, context, error, suite))

    def with_suite(self, suite: str) -> "SuiteLogger":
        """
        Create a suite-specific logger wrapper.

        Args:
            suite: Verification suite name

        Returns:
            SuiteLogger instance
        """
        return SuiteLogger(self, suite)


class SuiteLogger:
    """Wrapper around StructuredLogger that automatically includes the suite name."""

    def __init__(self, logger: StructuredLogger, suite: str):
        self.logger = logger
        self.suite = suite

    def debug(self, message: str, context: Optional[Dict[str, Any]] = None) -> None:
        self.logger.debug(message, context, self.suite)

    def info(self, message: str, context: Optional[Dict[str, Any]] = None) -> None:
        self.logger.info(message, context, self.suite)

    def warning(self, message: str, context: Optional[Dict[str, Any]] = None) -> None:
        self.logger.warning(message, context, self.suite)

    def error(
        self,
        message: str,
        error: Optional[BaseException] = None,
        context: Optional[Dict[str, Any]] = None,
    ) -> None:
        self.logger.error(message, error, context, self.suite)


def get_logger(
    name: str,
    component: Optional[str] = None,
    log_dir: Optional[str] = None,
    log_level: Union[str, int, None] = None,
    run_id: Optional[str] = None,
) -> StructuredLogger:
    """
    Get a configured structured logger.

    Args:
        name: Logger name
        component: Optional component identifier
        log_dir: Optional directory for log files
        log_level: Logging level (INFO, DEBUG, etc)
        run_id: Optional correlation id

    Returns:
        Configured structured logger
    """
    return StructuredLogger(name, component, log_dir, log_level, run_id)
