"""Reusable validation utilities for frobnil configuration and profiles.

Provides type validation functions that raise ConfigError on validation
failures. Profile parsing wraps these and re-raises as ProfileError.
"""

from typing import Any, Iterable, Optional


class ConfigError(Exception):
    """Error loading or validating configuration."""

    pass


def require_type(value: Any, expected_type: type, field_name: str) -> None:
    """Validate that a value is of the expected type.

    Args:
        value: The value to validate
        expected_type: The expected type (e.g., str, int, dict)
        field_name: The field name for error messages

    Raises:
        ConfigError: If value is not of the expected type
    """
    # bool is an int subclass
    if expected_type is int and isinstance(value, bool):
        raise ConfigError(f"'{field_name}' must be a int")
    if not isinstance(value, expected_type):
        type_name = expected_type.__name__
        raise ConfigError(f"'{field_name}' must be a {type_name}")


def require_string(value: Any, field_name: str) -> None:
    """Validate that a value is a non-empty string.

    Raises:
        ConfigError: If value is not a string or is empty
    """
    if not isinstance(value, str) or not value:
        raise ConfigError(f"'{field_name}' must be a non-empty string")


def require_dict(value: Any, field_name: str) -> None:
    """Validate that a value is a dict."""
    require_type(value, dict, field_name)


def require_list(value: Any, field_name: str) -> None:
    """Validate that a value is a list."""
    require_type(value, list, field_name)


def require_int(
    value: Any,
    field_name: str,
    minimum: Optional[int] = None,
) -> None:
    """Validate that a value is an int, optionally bounded below.

    Args:
        value: The value to validate
        field_name: The field name for error messages
        minimum: Smallest accepted value, if any

    Raises:
        ConfigError: If value is not an int or is below minimum
    """
    require_type(value, int, field_name)
    if minimum is not None and value < minimum:
        raise ConfigError(f"'{field_name}' must be >= {minimum}")


def require_bool(value: Any, field_name: str) -> None:
    """Validate that a value is a bool."""
    require_type(value, bool, field_name)


def require_choice(value: Any, choices: Iterable[str], field_name: str) -> None:
    """Validate that a value is one of a fixed set of strings.

    Raises:
        ConfigError: If value is not among choices
    """
    allowed = list(choices)
    if value not in allowed:
        raise ConfigError(f"'{field_name}' must be one of {', '.join(allowed)}")
