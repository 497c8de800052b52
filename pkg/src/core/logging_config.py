"""Logging configuration for the application"""
import logging
import sys
from pathlib import Path
from typing import Optional
from src.core.config import settings


def setup_logging(
    name: str = "netdisrupt",
    log_level: Optional[str] = None,
    log_file: Optional[str] = None
) -> logging.Logger:
    """
    Set up logging configuration

    Args:
        name: Logger name (usually __name__)
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional log file name, created under settings.LOG_DIR

    Returns:
        Configured logger instance
    """
    if log_level is None:
        log_level = settings.LOG_LEVEL_RESOLVED

    level = getattr(logging, log_level.upper(), logging.INFO)

    logger = logging.getLogger(name)
    logger.setLevel(level)

    # Avoid duplicate handlers
    if logger.handlers:
        return logger

    detailed_formatter = logging.Formatter(
        fmt='%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    simple_formatter = logging.Formatter(
        fmt='%(asctime)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    # Console handler; stdout is reserved for command output, so logs go to stderr
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(simple_formatter)
    logger.addHandler(console_handler)

    if log_file:
        logs_dir = Path(settings.LOG_DIR)
        logs_dir.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(logs_dir / log_file, encoding='utf-8')
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(detailed_formatter)
        logger.addHandler(file_handler)

    # Children log through this logger's handlers only
    logger.propagate = False
    return logger


def set_level(level: str, name: str = "netdisrupt") -> None:
    """Change the level of the root application logger and its handlers."""
    numeric = getattr(logging, level.upper(), logging.INFO)
    logger = setup_logging(name)
    logger.setLevel(numeric)
    for handler in logger.handlers:
        if isinstance(handler, logging.FileHandler):
            continue
        handler.setLevel(numeric)


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """
    Get a logger instance with default configuration

    Module loggers live under the "netdisrupt" hierarchy so one call to
    setup_logging() configures all of them.

    Args:
        name: Logger name (usually __name__). If None, uses caller's module name.

    Returns:
        Logger instance
    """
    if name is None:
        import inspect
        frame = inspect.currentframe()
        if frame and frame.f_back:
            name = frame.f_back.f_globals.get('__name__', 'netdisrupt')
        else:
            name = 'netdisrupt'

    root = setup_logging("netdisrupt")
    if name == "netdisrupt":
        return root
    if name.startswith("src."):
        name = name[len("src."):]
    return logging.getLogger(f"netdisrupt.{name}")
