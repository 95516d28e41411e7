"""Bounded memo tables shared by the word-level recursions"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Callable, TypeVar

from tqmzv import config

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable)

_tables: list = []


def memoized(fn: F) -> F:
    """``lru_cache`` bounded by ``MEMO_SIZE``, registered for ``clear_memo``."""
    table = lru_cache(maxsize=config.MEMO_SIZE)(fn)
    _tables.append(table)
    return table


def memo_size() -> int:
    return sum(table.cache_info().currsize for table in _tables)


def clear_memo() -> None:
    logger.debug("dropping %i memoized entries", memo_size())
    for table in _tables:
        table.cache_clear()
