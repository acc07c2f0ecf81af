"""Configuration management for parabolic-kl."""

import os
from typing import Optional, Dict, Any
from dotenv import load_dotenv
import yaml

from parabolic_kl.utils.errors import InvalidInputError

# Load environment variables from .env file
load_dotenv()

TABLE_METHODS = ("rule1", "rule2", "lstree", "hecke")


class Config:
    """Manages size guards and logging settings."""

    def __init__(self, config_file: Optional[str] = None):
        """
        Initialize configuration.

        Args:
            config_file: Optional path to YAML configuration file
        """
        self.config_file = config_file
        self.config: Dict[str, Any] = {}

        if config_file and os.path.exists(config_file):
            with open(config_file, 'r') as f:
                try:
                    self.config = yaml.safe_load(f) or {}
                except yaml.YAMLError as e:
                    raise InvalidInputError(f"cannot parse {config_file}: {e}")
            if not isinstance(self.config, dict):
                raise InvalidInputError(f"{config_file} must hold a mapping")

    def _int_setting(self, env_var: str, section: str, key: str, default: int) -> int:
        raw = os.getenv(env_var)
        if raw is None:
            raw = (self.config.get(section) or {}).get(key, default)
        try:
            return int(raw)
        except (TypeError, ValueError):
            raise InvalidInputError(f"{env_var} / {section}.{key} must be an integer, got {raw!r}")

    @property
    def rule1_limit(self) -> int:
        """Largest N accepted for Rule I tables."""
        return self._int_setting("PKL_RULE1_LIMIT", "limits", "rule1", 10)

    @property
    def lstree_limit(self) -> int:
        """Largest N accepted for LS tree tables."""
        return self._int_setting("PKL_LSTREE_LIMIT", "limits", "lstree", 10)

    @property
    def rule2_limit(self) -> int:
        """Largest N accepted for Rule II tables."""
        return self._int_setting("PKL_RULE2_LIMIT", "limits", "rule2", 12)

    @property
    def hecke_limit(self) -> int:
        """Largest N accepted for Hecke module tables."""
        return self._int_setting("PKL_HECKE_LIMIT", "limits", "hecke", 12)

    @property
    def sn_basis_limit(self) -> int:
        """Largest N for which the full S_N Kazhdan-Lusztig basis is built."""
        return self._int_setting("PKL_SN_BASIS_LIMIT", "limits", "sn_basis", 6)

    @property
    def sn_verify_limit(self) -> int:
        """Largest N for the all-pairs S_N verifications."""
        return self._int_setting("PKL_SN_VERIFY_LIMIT", "limits", "sn_verify", 5)

    @property
    def log_level(self) -> str:
        """Logging level name."""
        return os.getenv("PKL_LOG_LEVEL") or (self.config.get("logging") or {}).get("level", "WARNING")

    def limit_for(self, method: str) -> int:
        """
        Size limit for a table method.

        Args:
            method: One of rule1, rule2, lstree, hecke or all

        Returns:
            Largest accepted N; for 'all' the minimum over every method
        """
        if method == "all":
            return min(self.limit_for(m) for m in TABLE_METHODS)
        if method not in TABLE_METHODS:
            raise InvalidInputError(f"Unknown method: {method}")
        return getattr(self, f"{method}_limit")
