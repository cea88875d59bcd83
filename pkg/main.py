"""
Main entry point for satlab.
Loads configuration, sets up logging and dispatches the command line.
"""

import logging
import sys
from typing import Optional, Sequence

from cli.commands import EXIT_USAGE, run
from config import Config


def setup_logging(log_level: str, log_file: str = "") -> None:
    """Configure logging; stdout is reserved for command output."""
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=getattr(logging, log_level.upper()),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=handlers,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main application entry point."""
    config = Config()
    try:
        config.validate()
    except ValueError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE

    setup_logging(config.log_level, config.log_file)
    logger = logging.getLogger("main")
    logger.debug("config: %s", config)

    return run(argv, config)


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        sys.exit(130)
