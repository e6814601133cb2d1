from __future__ import annotations

import logging
from pathlib import Path

from arrangementatlas.config.models import LoggingSettings


PACKAGE_LOGGER = "arrangementatlas"


def _parse_level(name: str) -> int:
    level = logging.getLevelName(name.upper())
    if not isinstance(level, int):
        raise ValueError(f"Invalid log level: {name}")
    return level


def _file_handler(path: Path) -> logging.Handler:
    path.parent.mkdir(parents=True, exist_ok=True)
    return logging.FileHandler(path, encoding="utf-8")


def configure_logging(settings: LoggingSettings) -> logging.Logger:
    """
    Route records to stderr (and `settings.file` when set) and return the package logger.

    `settings.level` applies to this package only; other libraries stay at WARNING or above
    so DEBUG runs show the search and algebra stages without third-party chatter.
    """

    level = _parse_level(settings.level)
    handlers: list[logging.Handler] = [logging.StreamHandler()]
    if settings.file is not None:
        handlers.append(_file_handler(settings.file))

    # The CLI can be entered repeatedly in one process; `force` drops handlers from earlier runs.
    logging.basicConfig(level=max(level, logging.WARNING), format=settings.format, handlers=handlers, force=True)
    package = logging.getLogger(PACKAGE_LOGGER)
    package.setLevel(level)
    return package
