"""
Logging setup for the hsk tools.

Reports are written to stdout, so every log record goes to stderr and,
when ``[log] log_file`` is set, to a file under ``logs/``.
"""

import logging
import sys
from pathlib import Path
from typing import Optional

from .config import LoggingConfig

DEFAULT_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def _numeric(level: str) -> int:
    return getattr(logging, level.upper(), logging.INFO)


def _attach(handler: logging.Handler, level: int, formatter: logging.Formatter) -> None:
    handler.setLevel(level)
    handler.setFormatter(formatter)
    logging.getLogger().addHandler(handler)


def setup_logging(
    level: str = 'INFO',
    log_file: Optional[str] = None,
    log_dir: Optional[str] = None,
    format_string: Optional[str] = None
) -> None:
    """
    Replace the root handlers with a stderr handler and an optional file handler.

    Args:
        level: Logging level name; unknown names fall back to INFO
        log_file: Name of the log file, if any
        log_dir: Directory for the log file (default 'logs')
        format_string: Record format (default DEFAULT_FORMAT)
    """
    numeric_level = _numeric(level)
    formatter = logging.Formatter(format_string or DEFAULT_FORMAT)

    root = logging.getLogger()
    root.setLevel(numeric_level)
    for handler in root.handlers[:]:
        root.removeHandler(handler)

    _attach(logging.StreamHandler(sys.stderr), numeric_level, formatter)
    if log_file:
        path = Path(log_dir or 'logs') / log_file
        path.parent.mkdir(parents=True, exist_ok=True)
        _attach(logging.FileHandler(path), numeric_level, formatter)
        logging.info(f"Logging to file: {path}")

    logging.debug(f"Logging configured with level: {level}")


def configure_logging(section: LoggingConfig, level_override: Optional[str] = None) -> None:
    """Apply the ``[log]`` section; ``level_override`` (from --log-level) wins over its level."""
    setup_logging(level_override or section.level, section.log_file)


def set_log_level(level: str) -> None:
    """Change the level of the root logger and each of its handlers."""
    numeric_level = _numeric(level)
    root = logging.getLogger()
    root.setLevel(numeric_level)
    for handler in root.handlers:
        handler.setLevel(numeric_level)
    logging.debug(f"Log level set to: {level}")
