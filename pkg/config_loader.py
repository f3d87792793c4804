"""Configuration loading and validation for frobnil.

Handles loading frobnil.json and filling engine, sweep and logging
defaults. Every key is optional; unknown sections are rejected so typos
do not silently fall back to defaults.
"""

import copy
from pathlib import Path
from typing import Any, Dict, Optional

import orjson

from logging_config import get_logger
from utils.validators import (
    ConfigError,
    require_bool,
    require_dict,
    require_int,
    require_string,
)

logger = get_logger(__name__)

DEFAULT_CONFIG_PATH = "frobnil.json"

DEFAULT_CONFIG: Dict[str, Any] = {
    "engine": {
        "max_e": 10,
        "window_factor": 4,
        "max_terms": 4096,
    },
    "sweep": {
        "workers": 4,
        "use_processes": True,
    },
    "logging": {
        "level": "INFO",
        "json": False,
    },
}

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

__all__ = [
    "ConfigError",
    "DEFAULT_CONFIG",
    "DEFAULT_CONFIG_PATH",
    "load_config",
    "validate_schema",
]


def load_config(path: Optional[str] = None) -> Dict[str, Any]:
    """Load and validate configuration, merged over the defaults.

    Args:
        path: Path to a JSON config file. None means the default path,
            which may be absent.

    Returns:
        Validated configuration dictionary with every key present

    Raises:
        ConfigError: If config is invalid or an explicit file cannot be read
    """
    explicit = path is not None
    config_path = Path(path if path is not None else DEFAULT_CONFIG_PATH)

    if not config_path.exists():
        if explicit:
            raise ConfigError(f"Config file not found: {config_path}")
        logger.debug(f"No {config_path} found, using built-in defaults")
        return copy.deepcopy(DEFAULT_CONFIG)

    try:
        raw = orjson.loads(config_path.read_bytes())
    except orjson.JSONDecodeError as e:
        raise ConfigError(f"Invalid JSON in {config_path}: {e}")
    except OSError as e:
        raise ConfigError(f"Failed to read {config_path}: {e}")

    validate_schema(raw)
    config = merge_defaults(raw)
    logger.info(
        f"Loaded config from {config_path} "
        f"(max_e={config['engine']['max_e']}, "
        f"workers={config['sweep']['workers']})"
    )
    return config


def merge_defaults(raw: Dict[str, Any]) -> Dict[str, Any]:
    """Overlay a validated config onto DEFAULT_CONFIG."""
    config = copy.deepcopy(DEFAULT_CONFIG)
    for section, values in raw.items():
        config[section].update(values)
    return config


def validate_schema(config: Any) -> None:
    """Validate configuration schema.

    Args:
        config: Parsed configuration document

    Raises:
        ConfigError: If schema validation fails
    """
    if not isinstance(config, dict):
        raise ConfigError("Config must be a JSON object")

    unknown = set(config) - set(DEFAULT_CONFIG)
    if unknown:
        raise ConfigError(f"Unknown config section(s): {', '.join(sorted(unknown))}")

    if "engine" in config:
        validate_engine(config["engine"])
    if "sweep" in config:
        validate_sweep(config["sweep"])
    if "logging" in config:
        validate_logging(config["logging"])


def _reject_unknown_keys(section: Dict[str, Any], name: str) -> None:
    unknown = set(section) - set(DEFAULT_CONFIG[name])
    if unknown:
        raise ConfigError(f"Unknown key(s) in {name}: {', '.join(sorted(unknown))}")


def validate_engine(engine: Any) -> None:
    """Validate the engine section.

    Raises:
        ConfigError: If a value is missing its type or range
    """
    require_dict(engine, "engine")
    _reject_unknown_keys(engine, "engine")
    if "max_e" in engine:
        require_int(engine["max_e"], "engine.max_e", minimum=1)
    if "window_factor" in engine:
        require_int(engine["window_factor"], "engine.window_factor", minimum=0)
    if "max_terms" in engine:
        require_int(engine["max_terms"], "engine.max_terms", minimum=16)


def validate_sweep(sweep: Any) -> None:
    """Validate the sweep section."""
    require_dict(sweep, "sweep")
    _reject_unknown_keys(sweep, "sweep")
    if "workers" in sweep:
        require_int(sweep["workers"], "sweep.workers", minimum=1)
    if "use_processes" in sweep:
        require_bool(sweep["use_processes"], "sweep.use_processes")


def validate_logging(section: Any) -> None:
    """Validate the logging section."""
    require_dict(section, "logging")
    _reject_unknown_keys(section, "logging")
    if "level" in section:
        require_string(section["level"], "logging.level")
        if section["level"].upper() not in LOG_LEVELS:
            raise ConfigError(f"'logging.level' must be one of {', '.join(LOG_LEVELS)}")
    if "json" in section:
        require_bool(section["json"], "logging.json")
