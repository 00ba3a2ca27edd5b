from .logging_config import setup_logging, get_logger, LogLevel, DebugCategory

__all__ = ["setup_logging", "get_logger", "LogLevel", "DebugCategory"]
