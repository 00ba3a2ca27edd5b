import os
import logging
from fractions import Fraction
from typing import Optional
from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)


def _int_setting(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring malformed {name}={raw!r}, using {default}")
        return default


def _fraction_setting(name: str, default: str) -> Fraction:
    raw = os.getenv(name, default)
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError):
        logger.warning(f"Ignoring malformed {name}={raw!r}, using {default}")
        return Fraction(default)


# Path enumeration
PATH_CAP_ENV = "MMATRIX_PATH_CAP"
DEFAULT_PATH_CAP = 1_000_000


def default_path_cap() -> int:
    """Path cap honouring MMATRIX_PATH_CAP at call time"""
    return _int_setting(PATH_CAP_ENV, DEFAULT_PATH_CAP)


# Classification
SPECTRAL_ITERATIONS = _int_setting("MMATRIX_SPECTRAL_ITERATIONS", 32)
SPECTRAL_SHIFT = _fraction_setting("MMATRIX_SPECTRAL_SHIFT", "1/1000")
MAX_MINOR_ORDER = _int_setting("MMATRIX_MAX_MINOR_ORDER", 16)

# Counterexample search
CHECKPOINT_EVERY = _int_setting("MMATRIX_CHECKPOINT_EVERY", 256)

# Logging
LOG_FILE: Optional[str] = os.getenv("MMATRIX_LOG_FILE")
