"""
Process-pool runner.
"""

import logging
import multiprocessing
from typing import Callable, Iterable, List, Optional

from plethyx_core.interfaces import RunnerConfigError, WorkRunner

logger = logging.getLogger(__name__)


class PoolRunner(WorkRunner):
    """Runs work units on a ``multiprocessing.Pool``.

    ``Pool.map`` returns results in input order, so output never depends
    on the number of processes. The pool is started lazily on first use.
    """

    def __init__(self, processes: int, chunksize: Optional[int] = None):
        if processes < 1:
            raise RunnerConfigError(f"Process count must be at least 1, got {processes}")
        self._processes = processes
        self._chunksize = chunksize
        self._pool = None

    def _get_pool(self):
        if self._pool is None:
            logger.info("Starting pool with %d processes", self._processes)
            self._pool = multiprocessing.Pool(processes=self._processes)
        return self._pool

    def map(self, fn: Callable, items: Iterable) -> List:
        items = list(items)
        if len(items) <= 1:
            return [fn(item) for item in items]
        chunksize = self._chunksize or max(1, len(items) // (4 * self._processes))
        return self._get_pool().map(fn, items, chunksize)

    def close(self) -> None:
        if self._pool is not None:
            self._pool.close()
            self._pool.join()
            self._pool = None

    @property
    def workers(self) -> int:
        return self._processes

    def get_info(self) -> str:
        state = "running" if self._pool is not None else "idle"
        return f"Process pool runner ({self._processes} workers, {state})"
