import logging
import sys
from typing import Optional, TextIO
from enum import Enum


class LogLevel(Enum):
    DEBUG = logging.DEBUG
    INFO = logging.INFO
    WARNING = logging.WARNING
    ERROR = logging.ERROR


class DebugCategory(Enum):
    MATRIX = "matrix"
    CLASSIFY = "classify"
    GRAPH = "graph"
    INVERSE = "inverse"
    BANDED = "banded"
    SEARCH = "search"
    CLI = "cli"


_installed_handlers: list[logging.Handler] = []


class CategoryFilter(logging.Filter):
    def __init__(self, debug_categories: Optional[list[DebugCategory]] = None):
        super().__init__()
        self.debug_categories = debug_categories or []

    def filter(self, record: logging.LogRecord) -> bool:
        if not hasattr(record, 'category'):
            setattr(record, 'category', 'general')
        return not self.debug_categories or getattr(record, 'category') in [cat.value for cat in self.debug_categories]


def setup_logging(
    debug_categories: Optional[list[DebugCategory]] = None,
    log_file: Optional[str] = None,
    stream: Optional[TextIO] = None,
    level: Optional[LogLevel] = None
) -> None:
    """Configure root logging.

    The console handler writes to stderr: stdout is reserved for JSON reports.
    """
    root_logger = logging.getLogger()
    for handler in _installed_handlers:
        root_logger.removeHandler(handler)
        handler.close()
    _installed_handlers.clear()
    if level is None:
        level = LogLevel.DEBUG if debug_categories else LogLevel.WARNING
    root_logger.setLevel(level.value)

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - [%(category)s] - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    category_filter = CategoryFilter(debug_categories)

    # Console handler
    console_handler = logging.StreamHandler(stream or sys.stderr)
    console_handler.setFormatter(formatter)
    console_handler.addFilter(category_filter)
    root_logger.addHandler(console_handler)
    _installed_handlers.append(console_handler)

    # File handler
    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(formatter)
        file_handler.addFilter(category_filter)
        root_logger.addHandler(file_handler)
        _installed_handlers.append(file_handler)


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)
