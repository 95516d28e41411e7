"""Exact truncated q-series of q-multiple zeta values.

All evaluators work with plain lists of exact rationals (ints whenever
possible) indexed by the power of q and only build QSeries at the end.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from math import comb

from tqmzv.algebra.coefficients import Rational, as_rational
from tqmzv.algebra.words import Index
from tqmzv.series.qseries import QSeries
from tqmzv.series.tpoly import TPoly
from tqmzv.storage import BaseSeriesCache, get_default_cache

logger = logging.getLogger(__name__)

FILLERS = (",", "+", "-1+")


def _mul(a: list[int], b: list[int], order: int) -> list[int]:
    result = [0] * (order + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(order + 1 - i):
                if b[j]:
                    result[i + j] += x * b[j]
    return result


def _one_minus_q_power(k: int, order: int) -> list[int]:
    """(1 - q)^k"""
    return [
        (-1) ** j * comb(k, j) if j <= k else 0 for j in range(order + 1)
    ]


@lru_cache(maxsize=4096)
def _inv_qbracket(m: int, k: int, order: int) -> tuple[int, ...]:
    geometric = [0] * (order + 1)
    for r in range(order // m + 1):
        geometric[m * r] = comb(k - 1 + r, r)
    return tuple(_mul(_one_minus_q_power(k, order), geometric, order))


def inv_qbracket_pow(m: int, k: int, order: int) -> QSeries:
    """1 / [m]^k = (1 - q)^k / (1 - q^m)^k"""
    if m < 1 or k < 1:
        raise ValueError(f"need m, k >= 1, got m={m}, k={k}")
    return QSeries.from_rationals(_inv_qbracket(m, k, order), order)


def _summand(m: int, k: int, order: int) -> list[int]:
    """q^((k-1) m) / [m]^k"""
    shift = (k - 1) * m
    result = [0] * (order + 1)
    if shift > order:
        return result
    inverse = _inv_qbracket(m, k, order)
    for n in range(order + 1 - shift):
        result[n + shift] = inverse[n]
    return result


def _zeta_ints(parts: tuple[int, ...], order: int, star: bool) -> list[int]:
    # g[m] holds G_j(m); G_(l+1) is identically 1
    g = [[1] + [0] * order for _ in range(order + 1)]
    for k in reversed(parts):
        inner = g
        g = [[0] * (order + 1)]
        for m in range(1, order + 1):
            term = _summand(m, k, order)
            below = inner[m] if star else inner[m - 1]
            step = _mul(term, below, order) if any(term) else term
            g.append([a + b for a, b in zip(g[m - 1], step)])
    return g[order]


def _cached(kind: str, index: Index, order: int, cache: BaseSeriesCache | None) -> QSeries:
    index.require_admissible()
    if order < 0:
        raise ValueError(f"series order must be >= 0, got {order}")
    cache = cache if cache is not None else get_default_cache()
    series = cache.get(kind, index, order)
    if series is None:
        logger.debug("computing %s(%s) to order %i", kind, index, order)
        series = QSeries.from_rationals(
            _zeta_ints(index.parts, order, kind == "star"), order
        )
        cache.put(kind, index, order, series)
    return series


def zeta_q(index: Index, order: int, cache: BaseSeriesCache | None = None) -> QSeries:
    """sum over m_1 > ... > m_l >= 1 of prod q^((k_j-1) m_j) / [m_j]^k_j"""
    return _cached("zeta", index, order, cache)


def zeta_q_star(
    index: Index, order: int, cache: BaseSeriesCache | None = None
) -> QSeries:
    return _cached("star", index, order, cache)


def filler_indices(index: Index) -> list[tuple[Index, int, int]]:
    """Every ``(p, minus_count, merge_count)`` from filling the gaps of the
    index with ``,``, ``+`` or ``-1+``."""
    result = []
    first, *rest = index.parts
    for fillers in product(FILLERS, repeat=len(rest)):
        parts = [first]
        minus = merges = 0
        for filler, k in zip(fillers, rest):
            if filler == ",":
                parts.append(k)
            elif filler == "+":
                parts[-1] += k
                merges += 1
            else:
                parts[-1] += k - 1
                merges += 1
                minus += 1
        result.append((Index(tuple(parts)), minus, merges))
    return result


def zeta_q_t_direct(
    index: Index, order: int, cache: BaseSeriesCache | None = None
) -> QSeries:
    """Sum of (1-q)^(k - wt p) t^(l - dep p) zeta_q(p) over the fillings p."""
    index.require_admissible()
    rows: list[dict[int, Rational]] = [{} for _ in range(order + 1)]
    for p, minus, merges in filler_indices(index):
        values = _mul(
            _one_minus_q_power(minus, order),
            zeta_q(p, order, cache).rationals(),
            order,
        )
        for n, value in enumerate(values):
            if value:
                rows[n][merges] = rows[n].get(merges, 0) + value
    return QSeries(order, [TPoly(row) for row in rows])


def zeta_q_naive(index: Index, order: int, star: bool = False) -> QSeries:
    """Brute force over all descending tuples with m_1 <= N."""
    index.require_admissible()
    depth = index.depth
    total = [0] * (order + 1)
    candidates = range(order, 0, -1)
    choose = combinations_with_replacement if star else combinations
    for tuple_ in choose(candidates, depth):
        term: list[Rational] = [1] + [0] * order
        for m, k in zip(tuple_, index.parts):
            term = _mul(term, _summand(m, k, order), order)
            if not any(term):
                break
        total = [a + b for a, b in zip(total, term)]
    return QSeries.from_rationals(map(as_rational, total), order)
