"""Exhaustive word and index grids for the verification suites"""

from __future__ import annotations

from itertools import product
from typing import Iterator

from tqmzv.algebra.words import SUBSPACES, Index


def enumerate_words(
    max_weight: int, subspace: str | None = None, min_weight: int = 0
) -> Iterator[str]:
    """All words with min_weight <= length <= max_weight, length-lex order."""
    check = SUBSPACES[subspace] if subspace else None
    for length in range(min_weight, max_weight + 1):
        for letters in product("xy", repeat=length):
            word = "".join(letters)
            if check is None or check(word):
                yield word


def compositions(weight: int) -> Iterator[tuple[int, ...]]:
    if weight == 0:
        yield ()
        return
    for first in range(1, weight + 1):
        for rest in compositions(weight - first):
            yield (first,) + rest


def enumerate_indices(
    max_weight: int,
    max_depth: int | None = None,
    admissible: bool = True,
    min_weight: int = 1,
    exclude_all_ones: bool = False,
) -> Iterator[Index]:
    for weight in range(max(min_weight, 1), max_weight + 1):
        for parts in sorted(compositions(weight), key=lambda p: (len(p), p)):
            if max_depth is not None and len(parts) > max_depth:
                continue
            index = Index(parts)
            if admissible and not index.is_admissible():
                continue
            if exclude_all_ones and index.is_all_ones():
                continue
            yield index
