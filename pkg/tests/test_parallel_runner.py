"""Tests for parallel_runner.py - worker pools for sweeps and window scans."""

import asyncio
from functools import partial
from math import factorial
from typing import List

import pytest

from ff_linalg import binomial_mod_p
from parallel_runner import (
    DEFAULT_MAX_CONCURRENCY,
    ParallelExecutor,
    ParallelResult,
    create_parallel_executor,
    run_blocking_parallel,
)


def fails_on_two(p: int) -> int:
    if p == 2:
        raise ValueError("characteristic 2 not supported here")
    return p * p


class TestParallelResult:
    """Tests for ParallelResult dataclass."""

    def test_fulfilled(self):
        result = ParallelResult(status="fulfilled", result={"p": 7})

        assert result.ok
        assert result.error is None

    def test_rejected(self):
        result = ParallelResult(status="rejected", error="FieldError: 4 is not prime")

        assert not result.ok
        assert result.result is None


class TestParallelExecutorInit:
    """Tests for ParallelExecutor initialization."""

    def test_defaults(self):
        executor = ParallelExecutor()

        assert executor.max_concurrency == DEFAULT_MAX_CONCURRENCY
        assert executor.use_processes is False

    def test_rejects_zero(self):
        with pytest.raises(ValueError, match="at least 1"):
            ParallelExecutor(max_concurrency=0)

    def test_limit_is_fixed_at_construction(self):
        executor = ParallelExecutor(max_concurrency=5)

        with pytest.raises(AttributeError):
            executor.max_concurrency = 10
        assert executor.max_concurrency == 5

    def test_factory(self):
        executor = create_parallel_executor(max_concurrency=3, use_processes=True)

        assert isinstance(executor, ParallelExecutor)
        assert executor.max_concurrency == 3
        assert executor.use_processes is True


class TestExecuteParallel:
    """Tests for ParallelExecutor.execute_parallel()."""

    @pytest.mark.asyncio
    async def test_empty(self):
        assert await ParallelExecutor().execute_parallel([]) == []

    @pytest.mark.asyncio
    async def test_mixed_results_keep_order(self):
        executor = ParallelExecutor()

        async def succeeds():
            return "ok"

        async def fails():
            raise RuntimeError("boom")

        results = await executor.execute_parallel([succeeds, fails, succeeds])

        assert [r.status for r in results] == ["fulfilled", "rejected", "fulfilled"]
        assert "RuntimeError: boom" == results[1].error

    @pytest.mark.asyncio
    async def test_concurrency_limit_enforced(self):
        executor = ParallelExecutor(max_concurrency=2)
        running = 0
        peak = 0

        async def track():
            nonlocal running, peak
            running += 1
            peak = max(peak, running)
            await asyncio.sleep(0.02)
            running -= 1
            return "done"

        results = await executor.execute_parallel([track for _ in range(8)])

        assert peak <= 2
        assert all(r.ok for r in results)

    @pytest.mark.asyncio
    async def test_concurrency_one_runs_sequentially(self):
        executor = ParallelExecutor(max_concurrency=1)
        order: List[str] = []

        async def record(i):
            order.append(f"start_{i}")
            await asyncio.sleep(0.01)
            order.append(f"end_{i}")
            return i

        callables: List = [lambda i=n: record(i) for n in range(3)]  # type: ignore[misc]

        await executor.execute_parallel(callables)  # type: ignore[arg-type]

        assert order == ["start_0", "end_0", "start_1", "end_1", "start_2", "end_2"]


class TestMapBlocking:
    """Tests for blocking jobs on thread and process pools."""

    @pytest.mark.asyncio
    async def test_threads_keep_input_order(self):
        executor = ParallelExecutor(max_concurrency=3)

        results = await executor.map_blocking(partial(binomial_mod_p, 10, 3), [2, 3, 5, 7])

        assert [int(r.result) for r in results] == [120 % p for p in (2, 3, 5, 7)]

    @pytest.mark.asyncio
    async def test_one_failure_does_not_cancel_the_rest(self):
        executor = ParallelExecutor(max_concurrency=2)

        results = await executor.map_blocking(fails_on_two, [2, 3, 5])

        assert results[0].status == "rejected"
        assert "ValueError" in (results[0].error or "")
        assert [r.result for r in results[1:]] == [9, 25]

    @pytest.mark.asyncio
    async def test_processes(self):
        executor = ParallelExecutor(max_concurrency=2, use_processes=True)

        results = await executor.map_blocking(factorial, [3, 4, 5])

        assert [r.result for r in results] == [6, 24, 120]

    @pytest.mark.asyncio
    async def test_empty_items(self):
        assert await ParallelExecutor().map_blocking(factorial, []) == []


class TestRunBlockingParallel:
    """Tests for the synchronous entry point."""

    def test_inline_with_one_worker(self):
        results = run_blocking_parallel(fails_on_two, [3, 2, 5], max_concurrency=1)

        assert [r.ok for r in results] == [True, False, True]
        assert results[1].error == "ValueError: characteristic 2 not supported here"

    def test_pool(self):
        results = run_blocking_parallel(fails_on_two, [3, 5, 7, 11], max_concurrency=4)

        assert [r.result for r in results] == [9, 25, 49, 121]
