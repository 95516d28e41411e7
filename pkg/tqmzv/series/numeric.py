"""Floating point spot evaluation of the defining series"""

from __future__ import annotations

import logging

from tqmzv import config
from tqmzv.algebra.maps import s_map
from tqmzv.algebra.ncpoly import NcPoly
from tqmzv.algebra.words import Index, index_from_word
from tqmzv.exceptions import DomainError
from tqmzv.series.zeta import filler_indices

logger = logging.getLogger(__name__)

MAX_TERMS = 10_000_000


def _check_q(q: float) -> None:
    if not 0.0 < q < 1.0:
        raise DomainError(f"q must lie in (0, 1), got {q}", q)


def zeta_q_float(
    index: Index, q: float, eps: float | None = None, star: bool = False
) -> float:
    """Direct summation, stopped once the outer summand drops below
    ``eps * (1 - q)`` relative to the running total."""
    _check_q(q)
    index.require_admissible()
    eps = config.NUMERIC_EPS if eps is None else eps
    parts = index.parts
    depth = len(parts)
    # partial[j] is the partial sum over the last depth - j variables
    partial = [0.0] * depth + [1.0]
    for m in range(1, MAX_TERMS):
        q_m = q**m
        ratio = (1.0 - q) / (1.0 - q_m)
        terms = [q_m ** (k - 1) * ratio**k for k in parts]
        if star:
            for j in reversed(range(depth)):
                partial[j] += terms[j] * partial[j + 1]
            increment = terms[0] * partial[1]
        else:
            increment = terms[0] * partial[1]
            for j in range(depth):
                partial[j] += terms[j] * partial[j + 1]
        if m > depth and increment <= eps * (1.0 - q) * max(1.0, partial[0]):
            return partial[0]
    logger.warning("numeric summation of (%s) hit %i terms", index, MAX_TERMS)
    return partial[0]


def zeta_q_t_float(
    index: Index, q: float, t: float, eps: float | None = None
) -> float:
    total = 0.0
    for p, minus, merges in filler_indices(index):
        total += (1.0 - q) ** minus * t**merges * zeta_q_float(p, q, eps)
    return total


def numeric_eval(
    target: Index | NcPoly,
    q: float,
    t: float = 0.0,
    eps: float | None = None,
    star: bool = False,
) -> float:
    """Float value of zeta_q^t(index), zeta_q*(index) or Z(P) at (q, t)."""
    _check_q(q)
    if isinstance(target, Index):
        if star:
            return zeta_q_float(target, q, eps, star=True)
        return zeta_q_t_float(target, q, t, eps)
    target.require("H0")
    total = 0.0
    for word, coefficient in s_map(target).items():
        weight = coefficient.eval_float(1.0 - q, t)
        if not word:
            total += weight
        else:
            total += weight * zeta_q_float(index_from_word(word), q, eps)
    return total
