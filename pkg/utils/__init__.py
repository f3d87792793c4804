"""Utility modules for frobnil."""

from .validators import (
    ConfigError,
    require_bool,
    require_choice,
    require_dict,
    require_int,
    require_list,
    require_string,
    require_type,
)

__all__ = [
    "ConfigError",
    "require_bool",
    "require_choice",
    "require_dict",
    "require_int",
    "require_list",
    "require_string",
    "require_type",
]
