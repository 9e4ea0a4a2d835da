import sys
from typing import Optional

from loguru import logger

from src.core.config import get_settings

settings = get_settings()

LOG_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level} | {message}"


def setup_logging(level: Optional[str] = None) -> None:
    """Configure logging for the CLI and the API.

    Console output goes to stderr; stdout carries command results only.
    """

    # Remove default logger
    logger.remove()

    serialize = settings.LOG_FORMAT == "json"

    logger.add(
        sys.stderr,
        format=LOG_FORMAT,
        level=level or settings.LOG_LEVEL,
        serialize=serialize,
    )

    if settings.LOG_FILE:
        logger.add(
            settings.LOG_FILE,
            rotation="50 MB",
            retention="10 days",
            format=LOG_FORMAT,
            level="DEBUG",
            serialize=serialize,
        )
