"""Async helpers for fanning verification sweeps out over worker processes."""

import asyncio
import os
import threading
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Iterable, Optional, TypeVar

from chowgen.logging_config import ChowgenError, get_logger

logger = get_logger("async_utils")

T = TypeVar("T")
R = TypeVar("R")


class ConcurrencyLimiter:
    """Caps how many tool computations run at once, one semaphore per event loop."""

    def __init__(self, max_concurrent: int = 4):
        if max_concurrent < 1:
            raise ValueError(f"max_concurrent must be at least 1, got {max_concurrent}")
        self._max_concurrent = max_concurrent
        self._local = threading.local()
        self._active = 0

    @property
    def max_concurrent(self) -> int:
        return self._max_concurrent

    @property
    def active(self) -> int:
        """Slots currently held, across all loops."""
        return self._active

    @property
    def saturated(self) -> bool:
        return self._active >= self._max_concurrent

    async def acquire(self):
        if self.saturated:
            logger.debug(f"All {self._max_concurrent} computation slots busy, waiting")
        await self._get_semaphore().acquire()
        self._active += 1
        return self

    def release(self):
        self._active -= 1
        self._get_semaphore().release()

    async def __aenter__(self):
        await self.acquire()
        return self

    async def __aexit__(self, exc_type, exc_val, exc_tb):
        self.release()

    def _get_semaphore(self) -> asyncio.Semaphore:
        try:
            loop_id = id(asyncio.get_running_loop())
        except RuntimeError:
            return asyncio.Semaphore(self._max_concurrent)
        semaphores = self._local.__dict__.setdefault("semaphores", {})
        if loop_id not in semaphores:
            semaphores[loop_id] = asyncio.Semaphore(self._max_concurrent)
        return semaphores[loop_id]


class SweepTimeoutError(ChowgenError):
    """Raised when a sweep does not finish in time."""

    def __init__(self, func: Callable[..., Any], timeout: float, completed: int = 0):
        self.func = func
        self.timeout = timeout
        self.completed = completed
        name = getattr(func, "__name__", repr(func))
        super().__init__(
            f"Sweep of {name} timed out after {timeout}s ({completed} values finished)",
            suggestion="Raise --timeout, add --jobs or lower --r-max",
        )


async def run_sweep(
    func: Callable[[T], R],
    values: Iterable[T],
    jobs: int = 1,
    timeout: Optional[float] = None,
    progress_callback: Optional[Callable[[T, R], None]] = None,
) -> list[R]:
    """Evaluate func on every value, results in input order.

    With jobs > 1 the calls run in a process pool; func and the values must
    then be picklable (module-level functions, plain data). Results are
    gathered in input order, so the parallelism never changes output.

    Args:
        func: Function applied to each value.
        values: Inputs; consumed once.
        jobs: Number of worker processes. 1 runs inline.
        timeout: Maximum time in seconds for the whole sweep. Inline sweeps
            check it between values, so one slow value can overrun it.
        progress_callback: Called with (value, result) as each result is collected.

    Returns:
        One result per value, in input order.

    Raises:
        SweepTimeoutError: If the sweep exceeds the timeout.
        ValueError: If jobs < 1.
    """
    if jobs < 1:
        raise ValueError(f"jobs must be at least 1, got {jobs}")
    items = list(values)
    if jobs == 1 or len(items) <= 1:
        started = time.monotonic()
        results = []
        for value in items:
            if timeout is not None and time.monotonic() - started > timeout:
                raise SweepTimeoutError(func, timeout, completed=len(results))
            result = func(value)
            if progress_callback:
                progress_callback(value, result)
            results.append(result)
        return results

    loop = asyncio.get_running_loop()
    workers = min(jobs, len(items))
    logger.debug(f"Sweeping {len(items)} values over {workers} worker processes")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [loop.run_in_executor(pool, func, value) for value in items]
        try:
            results = await asyncio.wait_for(asyncio.gather(*futures), timeout=timeout)
        except asyncio.TimeoutError:
            completed = sum(1 for f in futures if f.done() and not f.cancelled())
            for f in futures:
                f.cancel()
            pool.shutdown(wait=False, cancel_futures=True)
            raise SweepTimeoutError(func, timeout, completed=completed) from None
    if progress_callback:
        for value, result in zip(items, results):
            progress_callback(value, result)
    return list(results)


def run_sweep_sync(
    func: Callable[[T], R],
    values: Iterable[T],
    jobs: int = 1,
    timeout: Optional[float] = None,
    progress_callback: Optional[Callable[[T, R], None]] = None,
) -> list[R]:
    """Blocking wrapper around run_sweep for callers without an event loop."""
    return asyncio.run(run_sweep(func, values, jobs, timeout, progress_callback))


_default_concurrent = min(4, os.cpu_count() or 4)
concurrency_limiter = ConcurrencyLimiter(_default_concurrent)
