from __future__ import annotations

from contextlib import contextmanager
import logging
import time
from typing import Iterator, MutableMapping


logger = logging.getLogger(__name__)


@contextmanager
def timed_stage(timings: MutableMapping[str, float], stage: str) -> Iterator[None]:
    """Record wall-clock seconds for `stage` into `timings`, also on failure."""

    start = time.perf_counter()
    try:
        yield
    finally:
        elapsed = time.perf_counter() - start
        timings[stage] = round(elapsed, 6)
        logger.info("stage=%s seconds=%.3f", stage, elapsed)
