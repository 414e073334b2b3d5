"""Ordered parallel map used for independent lattice-point counts.

The compiled kernel releases the GIL, so threads give real speed-ups; the
output order never depends on scheduling.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")

_default_workers = 1


def set_default_workers(n: int) -> None:
    global _default_workers
    if n < 1:
        raise ValueError("worker count must be positive")
    _default_workers = n


def default_workers() -> int:
    return _default_workers


def ordered_map(fn: Callable[[T], R], items: Iterable[T], workers: int | None = None) -> list[R]:
    items = list(items)
    n = _default_workers if workers is None else workers
    if n <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))
