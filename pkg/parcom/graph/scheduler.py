"""
Guided work scheduling over node ranges.

Workers pull contiguous index ranges of decreasing size from a shared queue,
so threads that drew high-degree nodes early take fewer nodes later. Task
bodies are expected to be numba ``nogil`` kernels or numpy operations so
threads make progress concurrently.
"""
import logging
import math
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple, TypeVar

from ..exceptions import ValidationError

logger = logging.getLogger(__name__)

S = TypeVar("S")
R = TypeVar("R")

DEFAULT_MIN_CHUNK = 64

_budget_lock = threading.Lock()
_worker_budget = 1


def set_worker_budget(workers: int) -> None:
    """Set the process-wide default worker count."""
    global _worker_budget
    if workers < 1:
        raise ValidationError(f"Worker budget must be positive, got {workers}")
    with _budget_lock:
        _worker_budget = workers
    logger.info(f"Worker budget set to {workers}")


def get_worker_budget() -> int:
    """Return the process-wide default worker count."""
    with _budget_lock:
        return _worker_budget


def resolve_workers(requested: Optional[int]) -> int:
    """Use ``requested`` when given, else the process-wide budget."""
    if requested is None:
        return get_worker_budget()
    return max(1, int(requested))


@dataclass(frozen=True)
class IndexRange:
    """Half-open range [start, stop)."""
    start: int
    stop: int

    def __len__(self) -> int:
        return self.stop - self.start


class GuidedRangeQueue:
    """Hands out ranges of size ceil(remaining / workers), at least min_chunk."""

    def __init__(self, total: int, workers: int, min_chunk: int = DEFAULT_MIN_CHUNK):
        self._total = total
        self._workers = max(1, workers)
        self._min_chunk = max(1, min_chunk)
        self._cursor = 0
        self._lock = threading.Lock()

    def next_range(self) -> Optional[IndexRange]:
        """Claim the next range, or None when exhausted."""
        with self._lock:
            remaining = self._total - self._cursor
            if remaining <= 0:
                return None
            size = max(self._min_chunk, math.ceil(remaining / self._workers))
            size = min(size, remaining)
            start = self._cursor
            self._cursor += size
            return IndexRange(start, start + size)


class GuidedScheduler:
    """Runs a range task over [0, total) with guided chunking."""

    def __init__(self, workers: Optional[int] = None, min_chunk: int = DEFAULT_MIN_CHUNK):
        """Initialize the scheduler.

        Args:
            workers: Thread count; the process budget when omitted
            min_chunk: Smallest range handed to a worker
        """
        self.workers = resolve_workers(workers)
        self.min_chunk = min_chunk

    def run(
        self,
        total: int,
        task: Callable[[S, int, int], R],
        make_state: Optional[Callable[[], S]] = None
    ) -> List[R]:
        """Apply ``task(state, start, stop)`` to disjoint ranges covering [0, total).

        Each worker creates its private state once through ``make_state``.
        Results are returned in ascending range order. With one worker the
        whole range is processed in a single ascending call.

        Args:
            total: Number of indices
            task: Range task
            make_state: Factory for per-worker scratch state

        Returns:
            Task results ordered by range start
        """
        factory = make_state or (lambda: None)
        if total <= 0:
            return []
        if self.workers == 1 or total <= self.min_chunk:
            return [task(factory(), 0, total)]

        queue = GuidedRangeQueue(total, self.workers, self.min_chunk)

        def worker() -> List[Tuple[int, R]]:
            state = factory()
            produced: List[Tuple[int, R]] = []
            while True:
                index_range = queue.next_range()
                if index_range is None:
                    return produced
                produced.append(
                    (index_range.start, task(state, index_range.start, index_range.stop))
                )

        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            futures = [executor.submit(worker) for _ in range(self.workers)]
            collected: List[Tuple[int, R]] = []
            for future in futures:
                collected.extend(future.result())

        collected.sort(key=lambda item: item[0])
        return [result for _, result in collected]

    def map_concurrent(self, tasks: List[Callable[[], R]]) -> List[R]:
        """Run independent zero-argument tasks concurrently, results in task order."""
        if not tasks:
            return []
        if self.workers == 1 or len(tasks) == 1:
            return [t() for t in tasks]
        with ThreadPoolExecutor(max_workers=min(self.workers, len(tasks))) as executor:
            futures = [executor.submit(t) for t in tasks]
            return [f.result() for f in futures]
