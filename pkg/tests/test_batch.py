"""
Tests for batch.py - bounded-concurrency execution of independent computations.

Tests cover:
- BatchProcessor status aggregation (success, partial, error)
- Result ordering and per-item error capture
- Coroutine handlers
"""
import asyncio
import logging

import pytest

from surface_bundles import config
from surface_bundles.batch import BatchItem, BatchProcessor, BatchResult
from surface_bundles.enums import BatchStatus


def _square(x: int) -> int:
    return x * x


def _odd_only(x: int) -> int:
    if x % 2 == 0:
        raise ValueError(f"{x} is even")
    return x


@pytest.mark.unit
class TestBatchItem:

    def test_item_ok(self):
        assert BatchItem(index=0, request={}, result=1).ok
        assert not BatchItem(index=0, request={}, error="boom").ok

    def test_result_views(self):
        result = BatchResult(status=BatchStatus.PARTIAL, items=[
            BatchItem(index=0, request={"x": 1}, result=1),
            BatchItem(index=1, request={"x": 2}, error="ValueError: 2 is even"),
        ])
        assert result.results == [1, None]
        assert result.success_count == 1
        assert result.errors == ["#1: ValueError: 2 is even"]


@pytest.mark.unit
class TestBatchProcessor:

    def test_all_succeed_in_request_order(self):
        result = BatchProcessor(max_concurrent=3).run([{"x": x} for x in range(10)], _square)
        assert result.status is BatchStatus.SUCCESS
        assert result.results == [x * x for x in range(10)]
        assert result.errors == []

    def test_partial_failure_is_recorded_per_item(self, caplog):
        with caplog.at_level(logging.ERROR, logger="surface_bundles.batch"):
            result = BatchProcessor(max_concurrent=2).run([{"x": x} for x in (1, 2, 3)], _odd_only)
        assert result.status is BatchStatus.PARTIAL
        assert result.results == [1, None, 3]
        assert result.errors == ["#1: ValueError: 2 is even"]
        assert "batch item 1 failed" in caplog.text

    def test_all_fail(self):
        result = BatchProcessor().run([{"x": 2}, {"x": 4}], _odd_only)
        assert result.status is BatchStatus.ERROR
        assert result.success_count == 0

    def test_coroutine_handler(self):
        async def double(x: int) -> int:
            await asyncio.sleep(0)
            return 2 * x

        result = BatchProcessor(max_concurrent=1).run([{"x": 1}, {"x": 5}], double)
        assert result.results == [2, 10]

    def test_process_batch_inside_a_running_loop(self):
        async def main():
            return await BatchProcessor(2).process_batch([{"x": 3}], _square)

        assert asyncio.run(main()).results == [9]

    def test_default_concurrency_comes_from_config(self, monkeypatch):
        monkeypatch.setattr(config, "MAX_WORKERS", 7)
        assert BatchProcessor().max_concurrent == 7

    def test_negative_concurrency_is_rejected(self):
        with pytest.raises(ValueError, match="max_concurrent"):
            BatchProcessor(max_concurrent=-1)
