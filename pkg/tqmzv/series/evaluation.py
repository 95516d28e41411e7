"""The evaluation map Z from H^0 to Q[t][[q]] with h -> 1 - q"""

from __future__ import annotations

import logging
from typing import Literal

from tqmzv.algebra.coefficients import CoefPoly, Rational
from tqmzv.algebra.maps import s_map
from tqmzv.algebra.ncpoly import NcPoly
from tqmzv.algebra.words import index_from_word
from tqmzv.series.qseries import QSeries
from tqmzv.series.zeta import zeta_q, zeta_q_t_direct
from tqmzv.storage import BaseSeriesCache

logger = logging.getLogger(__name__)

Route = Literal["s", "definition"]


def _accumulate(
    acc: dict[tuple[int, int], Rational],
    coefficient: CoefPoly,
    series: QSeries,
    order: int,
) -> None:
    """acc += f(coefficient) * series, keys ``(deg_q, deg_t)``"""
    for (deg_q, deg_c), c in coefficient.subs_hbar_q().items():
        if deg_q > order:
            continue
        for n in range(order + 1 - deg_q):
            row = series.coeffs[n]
            for deg_s, value in row.terms.items():
                key = (deg_q + n, deg_c + deg_s)
                acc[key] = acc.get(key, 0) + c * value


def z_eval(
    poly: NcPoly,
    order: int,
    route: Route = "s",
    cache: BaseSeriesCache | None = None,
    s: object = None,
) -> QSeries:
    """Evaluate an element of H^0 to order N.

    ``route="s"`` applies S and evaluates every word as a plain q-MZV;
    ``route="definition"`` evaluates each word with the filler sum.
    A rational ``s`` evaluates at t = s: the S route then uses S at s
    before any summation, the filler route substitutes afterwards.
    """
    poly.require("H0")
    if route == "s":
        source = s_map(poly) if s is None else s_map(poly.subs_t(s), s)
    else:
        source = poly
    acc: dict[tuple[int, int], Rational] = {}
    for word, coefficient in source.items():
        if not word:
            series = QSeries.one(order)
        elif route == "s":
            series = zeta_q(index_from_word(word), order, cache)
        else:
            series = zeta_q_t_direct(index_from_word(word), order, cache)
        _accumulate(acc, coefficient, series, order)
    series = QSeries.from_terms(acc, order)
    if s is not None and route != "s":
        series = series.subs_t(s)
    return series
