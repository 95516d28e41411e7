"""Series cache kept in process memory"""

from collections import OrderedDict

from tqmzv import config

from .base import BaseSeriesCache
from ..algebra.words import Index
from ..series.qseries import QSeries


class MemorySeriesCache(BaseSeriesCache):
    """A per-process cache; every worker process starts empty.
    Holds at most ``max_entries`` series and evicts the least recently used.
    """

    def __init__(self, max_entries: int | None = None):
        self.max_entries = max_entries or config.SERIES_CACHE_SIZE
        self.storage: OrderedDict[tuple[str, tuple[int, ...], int], QSeries] = (
            OrderedDict()
        )

    def get(self, kind: str, index: Index, order: int) -> QSeries | None:
        key = (kind, index.parts, order)
        series = self.storage.get(key)
        if series is not None:
            self.storage.move_to_end(key)
        return series

    def put(self, kind: str, index: Index, order: int, series: QSeries) -> None:
        key = (kind, index.parts, order)
        self.storage[key] = series
        self.storage.move_to_end(key)
        while len(self.storage) > self.max_entries:
            self.storage.popitem(last=False)

    def clear(self) -> None:
        self.storage.clear()

    def __len__(self) -> int:
        return len(self.storage)
