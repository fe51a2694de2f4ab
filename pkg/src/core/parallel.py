"""Order-preserving parallel map for pure computations."""

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, List, Optional, Sequence

logger = logging.getLogger(__name__)


class ParallelProcessor:
    """Maps a pure function over items in batches, merging results in input order.

    Because results are collected by position, the output never depends on
    how many workers ran or in which order they finished.
    """

    def __init__(self, max_workers: Optional[int] = None):
        self.max_workers = max_workers or os.cpu_count() or 1
        self.logger = logging.getLogger(__name__)

    def process_items_parallel(
        self,
        items: Sequence[Any],
        processor_func: Callable[[Any], Any],
        batch_size: int = 64,
        progress_callback: Optional[Callable[[int, int], None]] = None,
    ) -> List[Any]:
        """Apply ``processor_func`` to every item; exceptions propagate to the caller."""
        total_items = len(items)
        if total_items == 0:
            return []
        if self.max_workers == 1 or total_items == 1:
            self.logger.debug("Processing %d items serially", total_items)
            results = []
            for idx, item in enumerate(items, start=1):
                results.append(processor_func(item))
                if progress_callback:
                    progress_callback(idx, total_items)
            return results

        batches = [items[i:i + batch_size] for i in range(0, total_items, batch_size)]
        self.logger.debug(
            "Processing %d items in %d batches on %d workers",
            total_items,
            len(batches),
            self.max_workers,
        )

        results: List[Any] = []
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            for batch in batches:
                # map() yields in submission order regardless of completion order.
                results.extend(executor.map(processor_func, batch))
                if progress_callback:
                    progress_callback(len(results), total_items)
        return results
