"""Utility modules for parabolic-kl."""

from parabolic_kl.utils.config import Config
from parabolic_kl.utils.errors import (
    KLError,
    CoefficientOverflowError,
    IncomparablePathsError,
    InvalidInputError,
    SizeLimitError,
    MethodMismatchError,
)
from parabolic_kl.utils.logger import setup_logger, set_log_level

__all__ = [
    "Config",
    "KLError",
    "CoefficientOverflowError",
    "IncomparablePathsError",
    "InvalidInputError",
    "SizeLimitError",
    "MethodMismatchError",
    "setup_logger",
    "set_log_level",
]
