"""Logging configuration for frobnil.

Reports go to stdout, so log output defaults to stderr. A JSON formatter
from python-json-logger is available for batch sweeps whose logs are
collected by other tools.
"""

import logging
import sys

from pythonjsonlogger import jsonlogger

TEXT_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
JSON_FORMAT = "%(asctime)s %(levelname)s %(name)s %(message)s"


def setup_logging(
    use_stdout: bool = False,
    use_stderr: bool = True,
    log_level: int = logging.INFO,
    json_format: bool = False,
) -> None:
    """Configure logging for frobnil.

    Args:
        use_stdout: If True, log to stdout instead of stderr.
        use_stderr: If True, log to stderr (takes precedence over use_stdout).
        log_level: Logging level (default: INFO)
        json_format: Emit one JSON object per record
    """
    stream = sys.stderr if use_stderr or not use_stdout else sys.stdout
    handler: logging.Handler = logging.StreamHandler(stream)

    if json_format:
        formatter: logging.Formatter = jsonlogger.JsonFormatter(
            JSON_FORMAT, rename_fields={"levelname": "level", "asctime": "ts"}
        )
    else:
        formatter = logging.Formatter(TEXT_FORMAT, datefmt="%Y-%m-%d %H:%M:%S")

    handler.setFormatter(formatter)

    root_logger = logging.getLogger()
    for existing in list(root_logger.handlers):
        root_logger.removeHandler(existing)
    root_logger.setLevel(log_level)
    root_logger.addHandler(handler)

    # Reduce noise from third-party libraries
    logging.getLogger("sympy").setLevel(logging.WARNING)
    logging.getLogger("asyncio").setLevel(logging.WARNING)


def get_logger(name: str) -> logging.Logger:
    """Get a logger instance for the given module name.

    Args:
        name: Module name (typically __name__)

    Returns:
        Configured logger instance
    """
    return logging.getLogger(name)
