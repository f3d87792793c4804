"""Parallel execution support for frobnil.

Runs independent blocking computations (one prime of a sweep, one degree of
a window scan) on a worker pool, with semaphore-based concurrency limiting.
Results always come back in input order.
"""

import asyncio
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Awaitable, Callable, Iterable, List, Optional, TypeVar

from logging_config import get_logger

logger = get_logger(__name__)

T = TypeVar("T")

DEFAULT_MAX_CONCURRENCY: int = 4


@dataclass
class ParallelResult:
    """Result from a single parallel execution."""

    status: str
    result: Any = None
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.status == "fulfilled"


class ParallelExecutor:
    """Execute independent jobs concurrently with concurrency limiting.

    Uses asyncio.Semaphore for concurrency control and asyncio.gather
    with return_exceptions=True, so one failing job never cancels the rest.

    Example:
        executor = ParallelExecutor(max_concurrency=4)
        results = await executor.map_blocking(classify_prime, [5, 7, 11])
    """

    def __init__(
        self,
        max_concurrency: int = DEFAULT_MAX_CONCURRENCY,
        use_processes: bool = False,
    ):
        """Initialize ParallelExecutor.

        Args:
            max_concurrency: Maximum number of concurrent executions
            use_processes: Run blocking jobs in worker processes instead of
                threads; functions and arguments must then be picklable
        """
        if max_concurrency < 1:
            raise ValueError("max_concurrency must be at least 1")
        self._max_concurrency = max_concurrency
        self._use_processes = use_processes

    async def execute_parallel(
        self,
        callables: List[Callable[[], Awaitable[T]]],
    ) -> List[ParallelResult]:
        """Execute multiple async callables concurrently.

        Args:
            callables: List of async callables to execute

        Returns:
            List of ParallelResult objects in input order
        """
        if not callables:
            return []

        semaphore = asyncio.Semaphore(self._max_concurrency)

        async def run_with_semaphore(
            coro_func: Callable[[], Awaitable[T]],
        ) -> ParallelResult:
            async with semaphore:
                try:
                    result = await coro_func()
                    return ParallelResult(status="fulfilled", result=result)
                except Exception as e:
                    error_msg = f"{type(e).__name__}: {str(e)}"
                    logger.debug(f"[JOB_FAILED] {error_msg}")
                    return ParallelResult(status="rejected", error=error_msg)

        tasks = [run_with_semaphore(c) for c in callables]
        results = await asyncio.gather(*tasks, return_exceptions=True)

        final_results = []
        for r in results:
            if isinstance(r, ParallelResult):
                final_results.append(r)
            elif isinstance(r, Exception):
                final_results.append(
                    ParallelResult(
                        status="rejected",
                        error=f"{type(r).__name__}: {str(r)}",
                    )
                )
            else:
                final_results.append(ParallelResult(status="fulfilled", result=r))

        return final_results

    def _make_pool(self) -> Executor:
        if self._use_processes:
            return ProcessPoolExecutor(max_workers=self._max_concurrency)
        return ThreadPoolExecutor(max_workers=self._max_concurrency)

    async def map_blocking(
        self, func: Callable[[Any], T], items: Iterable[Any]
    ) -> List[ParallelResult]:
        """Apply a blocking function to every item on a worker pool.

        Args:
            func: Function of one argument
            items: Inputs, one job each

        Returns:
            ParallelResult per item, in input order
        """
        items = list(items)
        if not items:
            return []

        loop = asyncio.get_running_loop()
        with self._make_pool() as pool:

            def job(item: Any) -> Callable[[], Awaitable[T]]:
                return lambda: loop.run_in_executor(pool, func, item)

            results = await self.execute_parallel([job(item) for item in items])

        failed = sum(1 for r in results if not r.ok)
        logger.debug(f"[POOL_DONE] {len(results)} jobs, {failed} failed")
        return results

    @property
    def max_concurrency(self) -> int:
        """Get the maximum concurrency limit."""
        return self._max_concurrency

    @property
    def use_processes(self) -> bool:
        return self._use_processes


def create_parallel_executor(
    max_concurrency: int = DEFAULT_MAX_CONCURRENCY,
    use_processes: bool = False,
) -> ParallelExecutor:
    """Factory function to create a ParallelExecutor.

    Args:
        max_concurrency: Maximum concurrent executions (default: 4)
        use_processes: Use a process pool for blocking jobs

    Returns:
        Configured ParallelExecutor instance
    """
    return ParallelExecutor(max_concurrency=max_concurrency, use_processes=use_processes)


def run_blocking_parallel(
    func: Callable[[Any], T],
    items: Iterable[Any],
    max_concurrency: int = DEFAULT_MAX_CONCURRENCY,
    use_processes: bool = False,
) -> List[ParallelResult]:
    """Synchronous entry point around ParallelExecutor.map_blocking.

    With max_concurrency == 1 the jobs run inline, which keeps tracebacks
    and logging simple for small inputs.
    """
    items = list(items)
    if max_concurrency == 1:
        results = []
        for item in items:
            try:
                results.append(ParallelResult(status="fulfilled", result=func(item)))
            except Exception as e:
                results.append(
                    ParallelResult(status="rejected", error=f"{type(e).__name__}: {str(e)}")
                )
        return results
    executor = create_parallel_executor(max_concurrency, use_processes)
    return asyncio.run(executor.map_blocking(func, items))
