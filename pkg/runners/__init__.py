"""
Work runners: serial and process-pool backends for batch computations.
"""

import os
from typing import Optional

from plethyx_core.interfaces import RunnerConfigError, WorkRunner

from .pool_runner import PoolRunner
from .serial_runner import SerialRunner

THREADS_ENV = "PLETHYX_THREADS"


def resolve_threads(threads: Optional[int] = None) -> int:
    """Flag value, else $PLETHYX_THREADS, else the CPU count."""
    if threads is None:
        env = os.environ.get(THREADS_ENV, "").strip()
        if env:
            try:
                threads = int(env)
            except ValueError as e:
                raise RunnerConfigError(f"{THREADS_ENV} must be a positive integer, got '{env}'") from e
        else:
            threads = os.cpu_count() or 1
    if threads < 1:
        raise RunnerConfigError(f"Thread count must be at least 1, got {threads}")
    return threads


def create_runner(threads: Optional[int] = None) -> WorkRunner:
    threads = resolve_threads(threads)
    if threads == 1:
        return SerialRunner()
    return PoolRunner(threads)


__all__ = ["PoolRunner", "SerialRunner", "THREADS_ENV", "create_runner", "resolve_threads"]
