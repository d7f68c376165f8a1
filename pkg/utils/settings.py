"""Environment configuration and logging setup for the bracket-series engine."""

import logging
import os
import sys
from typing import Optional

from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)

DEFAULT_ORDER = 16
DEFAULT_PRECISION_SLACK = 8
DEFAULT_MAX_PRECISION_RETRIES = 6
DEFAULT_LOG_LEVEL = "WARNING"

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def _get_nonnegative_int(name: str, default: int) -> int:
    """
    Read a nonnegative integer from the environment.

    Invalid values are ignored with a warning and the default is used.
    """
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("ignoring %s=%r: not an integer, using %d", name, raw, default)
        return default
    if value < 0:
        logger.warning("ignoring %s=%r: negative, using %d", name, raw, default)
        return default
    return value


def get_default_order() -> int:
    """Truncation order used when a command or tool does not give one."""
    return _get_nonnegative_int("BRACKET_DEFAULT_ORDER", DEFAULT_ORDER)


def get_precision_slack() -> int:
    """Extra working precision the expression evaluator starts with."""
    return _get_nonnegative_int("BRACKET_PRECISION_SLACK", DEFAULT_PRECISION_SLACK)


def get_max_precision_retries() -> int:
    """How many times the evaluator doubles its slack before giving up."""
    return _get_nonnegative_int("BRACKET_MAX_PRECISION_RETRIES", DEFAULT_MAX_PRECISION_RETRIES)


def get_log_level() -> str:
    raw = os.getenv("BRACKET_LOG_LEVEL", DEFAULT_LOG_LEVEL).strip().upper()
    if raw not in logging.getLevelNamesMapping():
        logger.warning("ignoring BRACKET_LOG_LEVEL=%r: unknown level", raw)
        return DEFAULT_LOG_LEVEL
    return raw


def configure_logging(level: Optional[str] = None) -> None:
    """Install one stderr handler on the root logger."""
    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, "_bracket_series", False):
            root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler._bracket_series = True
    root.addHandler(handler)
    root.setLevel(level or get_log_level())
