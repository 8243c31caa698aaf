"""
Batch execution of independent computations (grid verification, H1 tables).

Each request is a dict of keyword arguments for one handler call. Handlers
are plain synchronous functions; they run in worker threads under a
semaphore so at most `max_concurrent` are in flight. Results come back in
request order, and a failing item is recorded rather than raised so the
rest of the batch still completes.
"""
from __future__ import annotations

import asyncio
import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable

from surface_bundles import config
from surface_bundles.enums import BatchStatus

logger = logging.getLogger(__name__)


@dataclass
class BatchItem:
    """Outcome of one request."""
    index: int
    request: dict[str, Any]
    result: Any = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None


@dataclass
class BatchResult:
    """Aggregated outcome of a batch, items in request order."""
    status: BatchStatus
    items: list[BatchItem] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def errors(self) -> list[str]:
        return [f"#{it.index}: {it.error}" for it in self.items if not it.ok]

    @property
    def results(self) -> list[Any]:
        return [it.result for it in self.items]

    @property
    def success_count(self) -> int:
        return sum(1 for it in self.items if it.ok)


class BatchProcessor:
    """Runs one handler over many requests with bounded concurrency."""

    def __init__(self, max_concurrent: int | None = None):
        self.max_concurrent = max_concurrent or config.MAX_WORKERS
        if self.max_concurrent < 1:
            raise ValueError(f"max_concurrent must be >= 1, got {self.max_concurrent}")

    async def process_batch(self, requests: list[dict[str, Any]], handler: Callable[..., Any]) -> BatchResult:
        start = time.perf_counter()
        semaphore = asyncio.Semaphore(self.max_concurrent)

        async def process_one(request: dict[str, Any], index: int) -> BatchItem:
            async with semaphore:
                try:
                    if asyncio.iscoroutinefunction(handler):
                        result = await handler(**request)
                    else:
                        result = await asyncio.to_thread(handler, **request)
                    return BatchItem(index=index, request=request, result=result)
                except Exception as exc:  # recorded per item
                    logger.error("batch item %d failed: %s", index, exc)
                    logger.debug("batch item %d traceback", index, exc_info=True)
                    return BatchItem(index=index, request=request, error=f"{type(exc).__name__}: {exc}")

        items = list(await asyncio.gather(*(process_one(r, i) for i, r in enumerate(requests))))

        failed = sum(1 for it in items if not it.ok)
        if not failed:
            status = BatchStatus.SUCCESS
        elif failed < len(items):
            status = BatchStatus.PARTIAL
        else:
            status = BatchStatus.ERROR
        elapsed = (time.perf_counter() - start) * 1000
        logger.info("batch of %d finished: %s (%d failed) in %.0f ms", len(items), status.value, failed, elapsed)
        return BatchResult(status=status, items=items, elapsed_ms=elapsed)

    def run(self, requests: list[dict[str, Any]], handler: Callable[..., Any]) -> BatchResult:
        """Synchronous entry point (owns its own event loop)."""
        return asyncio.run(self.process_batch(requests, handler))
