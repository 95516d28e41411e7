"""The base for the series cache"""

from abc import ABC, abstractmethod

from tqmzv.algebra.words import Index
from tqmzv.series.qseries import QSeries

KINDS = ("zeta", "star")


class BaseSeriesCache(ABC):
    """Base class for caches of exact zeta series, keyed by (kind, index, N).
    caches are advisory: a miss only costs a recomputation
    """

    @abstractmethod
    def get(self, kind: str, index: Index, order: int) -> QSeries | None:
        """
        looks a series up
        :param kind: ``zeta`` for strict descent, ``star`` for the star version
        :param index: the index
        :param order: the truncation order
        :return: the series or None on a miss
        """

    @abstractmethod
    def put(self, kind: str, index: Index, order: int, series: QSeries) -> None:
        """
        stores a series, replacing what was there
        :return: nothing
        """

    @abstractmethod
    def clear(self) -> None:
        """
        removes every stored series
        :return: nothing
        """

    def clear_memory(self) -> None:
        """
        drops whatever this process holds in memory, persistent records stay
        :return: nothing
        """
        self.clear()
