"""Serial runner: evaluates every work unit in the calling process."""

from __future__ import annotations

import logging
from typing import Callable, Iterable, List, TypeVar

from plethyx_core.interfaces import WorkRunner

T = TypeVar("T")
R = TypeVar("R")

logger = logging.getLogger(__name__)


class SerialRunner(WorkRunner):
    """In-process runner; the reference for every parallel backend."""

    def __init__(self) -> None:
        self._closed = False
        self._calls = 0

    # ------------------------------------------------------------------
    # WorkRunner implementation
    # ------------------------------------------------------------------
    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
        self._ensure_open()
        self._calls += 1
        items = list(items)
        logger.debug("serial map of %s over %d items", getattr(fn, "__name__", fn), len(items))
        return [fn(item) for item in items]

    def close(self) -> None:
        self._closed = True

    @property
    def workers(self) -> int:
        return 1

    def get_info(self) -> str:
        return f"Serial runner (1 worker, {self._calls} batches)"

    # ------------------------------------------------------------------
    # Internal helpers
    # ------------------------------------------------------------------
    def _ensure_open(self) -> None:
        if self._closed:
            raise RuntimeError("Serial runner is closed")
