"""Utility functions to tune logging
"""

from contextlib import contextmanager
import logging
import sys

from pythonjsonlogger.json import JsonFormatter

TEXT_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
JSON_FIELDS = "%(asctime)s %(levelname)s %(name)s %(message)s"


def configure_logging(level: str | int = logging.WARNING, json_format: bool = False) -> logging.Handler:
    """Send vwlab log records to stderr, as text or as JSON lines

    Parameters
    ----------
    level : str | int, optional
        Logging level name or number; by default WARNING
    json_format : bool, optional
        Emit one JSON object per record; by default False

    Returns
    -------
    logging.Handler
        The installed handler, replacing any previous root handlers
    """
    handler = logging.StreamHandler(sys.stderr)
    if json_format:
        handler.setFormatter(JsonFormatter(JSON_FIELDS))
    else:
        handler.setFormatter(logging.Formatter(TEXT_FORMAT))
    if isinstance(level, str):
        level = level.upper()
    logging.basicConfig(level=level, handlers=[handler], force=True)
    return handler


@contextmanager
def disable_all_logging(highest_level: int = logging.CRITICAL):
    """A context manager that will prevent any logging messages triggered during
    the body from being processed.

    Parameters
    ----------
    highest_level : int, optional
        the maximum logging level in use; by default logging.CRITICAL
    """
    previous_level = logging.root.manager.disable

    logging.disable(highest_level)

    try:
        yield
    finally:
        logging.disable(previous_level)
