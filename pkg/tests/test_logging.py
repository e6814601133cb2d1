from __future__ import annotations

import logging

import pytest

from arrangementatlas.config.models import LoggingSettings
from arrangementatlas.utils.logging import PACKAGE_LOGGER, configure_logging


@pytest.fixture(autouse=True)
def _restore_package_level():
    yield
    logging.getLogger(PACKAGE_LOGGER).setLevel(logging.NOTSET)


def test_unknown_level_is_rejected() -> None:
    with pytest.raises(ValueError, match="chatty"):
        configure_logging(LoggingSettings(level="chatty"))


def test_debug_applies_to_the_package_only(tmp_path) -> None:
    path = tmp_path / "logs" / "run.log"
    package = configure_logging(LoggingSettings(level="debug", format="%(name)s %(message)s", file=path))
    assert package.name == PACKAGE_LOGGER
    assert package.level == logging.DEBUG
    assert logging.getLogger().level == logging.WARNING

    logging.getLogger("arrangementatlas.geometry.sigma").debug("count stage=sigma_2")
    logging.getLogger("sympy").info("noise")
    for handler in logging.getLogger().handlers:
        handler.flush()

    text = path.read_text(encoding="utf-8")
    assert "arrangementatlas.geometry.sigma count stage=sigma_2" in text
    assert "noise" not in text
