"""
Ensemble worker pool.

Members run on a thread pool driven through asyncio; results come back in
member order regardless of completion order.
"""

import asyncio
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

from kspde.config import settings
from kspde.errors import MemberFailure

logger = logging.getLogger(__name__)

T = TypeVar("T")


class EnsemblePool:
    """Runs one callable per member seed with at most ``max_workers`` threads."""

    def __init__(self, max_workers: Optional[int] = None):
        self.max_workers = max(1, int(max_workers or settings.THREADS))

    async def map_members(self, task: Callable[[int], T], seeds: Sequence[int]) -> List[T]:
        """
        Run ``task(seed)`` for every seed.

        Raises:
            MemberFailure: the first failing member (in member order), carrying its seed
        """
        loop = asyncio.get_running_loop()
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            futures = [loop.run_in_executor(executor, task, seed) for seed in seeds]
            results = await asyncio.gather(*futures, return_exceptions=True)

        for seed, result in zip(seeds, results):
            if isinstance(result, BaseException):
                logger.error(f"Ensemble member with seed {seed} failed: {result}")
                raise MemberFailure(seed, result) from result
        logger.debug(f"Ensemble of {len(seeds)} members finished on {self.max_workers} workers")
        return list(results)

    def run(self, task: Callable[[int], T], seeds: Sequence[int]) -> List[T]:
        """Blocking wrapper around map_members for callers outside an event loop."""
        return asyncio.run(self.map_members(task, seeds))
