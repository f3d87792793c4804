"""Main entry point for frobnil.

Parses the command line, loads configuration, initializes logging and
runs the selected subcommand.
"""

import logging
import sys
from typing import Optional, Sequence

from cli import build_parser, execute
from config_loader import ConfigError, load_config
from logging_config import get_logger, setup_logging
from report import EXIT_ERROR

logger = get_logger(__name__)


def main(argv: Optional[Sequence[str]] = None) -> None:
    """Application entry point; exits with the command's status."""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = load_config(args.config)
    except ConfigError as e:
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(EXIT_ERROR)

    setup_logging(
        use_stderr=True,
        log_level=getattr(logging, config["logging"]["level"].upper()),
        json_format=config["logging"]["json"],
    )
    logger.debug(f"[START] frobnil {args.command}")
    sys.exit(execute(args, config))


if __name__ == "__main__":
    main()
