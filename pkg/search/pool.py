"""
Process pool for splitting enumeration levels across workers.
"""

from __future__ import annotations

import logging
import multiprocessing
from typing import Callable, Iterable, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def chunked(items: list[T], workers: int) -> list[list[T]]:
    """Split items into about four chunks per worker, preserving order."""
    if not items:
        return []
    size = max(1, len(items) // (max(workers, 1) * 4))
    return [items[i:i + size] for i in range(0, len(items), size)]


def parallel_map(func: Callable[[T], R], tasks: Iterable[T], workers: int = 1) -> list[R]:
    """
    Map func over tasks, in order.

    With one worker (or a single task) this runs in-process; otherwise a
    multiprocessing.Pool runs the tasks. func and tasks must be picklable.
    """
    tasks = list(tasks)
    if workers <= 1 or len(tasks) <= 1:
        return [func(task) for task in tasks]
    processes = min(workers, len(tasks), multiprocessing.cpu_count())
    logger.debug("parallel_map: %d tasks on %d processes", len(tasks), processes)
    with multiprocessing.Pool(processes=processes) as pool:
        return pool.map(func, tasks)
