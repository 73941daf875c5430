"""LRU cache of rectangular cell-to-cell distance matrices."""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass
from typing import Hashable, Sequence

from .hub_labeling import INF, HubLabels

MIN_CAPACITY = 7


@dataclass
class CacheStats:
    hits: int = 0
    misses: int = 0
    bypass: int = 0
    evictions: int = 0

    def as_dict(self) -> dict:
        return {"hits": self.hits, "misses": self.misses,
                "bypass": self.bypass, "evictions": self.evictions}


class _LabelRow:
    __slots__ = ("labels", "a", "cols")

    def __init__(self, labels: HubLabels, a: int, cols: Sequence[int]):
        self.labels, self.a, self.cols = labels, a, cols

    def __getitem__(self, j: int) -> int:
        return self.labels.query(self.a, self.cols[j])


class LabelView:
    """Stand-in for a matrix that answers every lookup from the labels."""

    bypass = True

    def __init__(self, rows: Sequence[int], cols: Sequence[int], labels: HubLabels):
        self.rows, self.cols, self.labels = rows, cols, labels

    def __getitem__(self, i: int) -> _LabelRow:
        return _LabelRow(self.labels, self.rows[i], self.cols)


class MatrixCache:
    """Bounded map ``key -> |A| x |B|`` distance matrix with LRU eviction.

    An :class:`~collections.OrderedDict` is the recency list: hits move to
    the end, eviction pops from the front. A search holds at most seven
    matrices at once, hence the minimum capacity. ``enabled=False`` skips
    matrices altogether and serves every lookup through a :class:`LabelView`.
    """

    def __init__(self, labels: HubLabels, capacity: int = 10_000,
                 side_limit: int = 50_000, enabled: bool = True):
        if capacity < MIN_CAPACITY:
            raise ValueError(f"cache capacity must be at least {MIN_CAPACITY}")
        self.labels = labels
        self.capacity = capacity
        self.side_limit = side_limit
        self.enabled = enabled
        self.stats = CacheStats()
        self._store: OrderedDict[Hashable, list[list[int]]] = OrderedDict()
        self._scratch = [INF] * labels.n

    def __len__(self) -> int:
        return len(self._store)

    def __contains__(self, key: Hashable) -> bool:
        return key in self._store

    def get(self, key: Hashable, rows: Sequence[int], cols: Sequence[int]):
        if not self.enabled or max(len(rows), len(cols)) > self.side_limit:
            self.stats.bypass += 1
            return LabelView(rows, cols, self.labels)
        store = self._store
        mat = store.get(key)
        if mat is not None:
            self.stats.hits += 1
            store.move_to_end(key)
            return mat
        self.stats.misses += 1
        mat = [self.labels.distances_from(a, cols, self._scratch) for a in rows]
        store[key] = mat
        if len(store) > self.capacity:
            store.popitem(last=False)
            self.stats.evictions += 1
        return mat


def get_matrix(cache: MatrixCache, key: Hashable, rows: Sequence[int], cols: Sequence[int]):
    return cache.get(key, rows, cols)
