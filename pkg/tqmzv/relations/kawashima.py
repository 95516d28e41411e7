"""The Kawashima type relation and its t = 0 consistency check"""

from __future__ import annotations

import logging

from tqmzv.algebra.maps import (
    phi_map,
    phi_t_map,
    s_inverse,
    s_map,
    y_power_inverse,
)
from tqmzv.algebra.ncpoly import NcPoly
from tqmzv.algebra.products import circledast, harmonic_star, t_circledast
from tqmzv.algebra.words import Y
from tqmzv.exceptions import DomainError
from tqmzv.models import VerificationReport
from tqmzv.relations._compare import compare_series
from tqmzv.series.evaluation import z_eval
from tqmzv.series.qseries import QSeries

logger = logging.getLogger(__name__)


def _check(m: int, v: NcPoly, w: NcPoly) -> None:
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}", m)
    v.require("Hy")
    w.require("Hy")


def _convolve(left: list[QSeries], right: list[QSeries], m: int, order: int) -> QSeries:
    """sum over i + j = m, i, j >= 1 of left[i] * right[j]"""
    total = QSeries.zero(order)
    for i in range(1, m):
        total = total + left[i] * right[m - i]
    return total


def kawashima_sides(
    m: int, v: NcPoly, w: NcPoly, order: int
) -> tuple[QSeries, QSeries]:
    _check(m, v, w)
    phi_v, phi_w = phi_t_map(v), phi_t_map(w)
    tails = [NcPoly.zero()] + [y_power_inverse(i) for i in range(1, m + 1)]

    def factors(phi: NcPoly) -> list[QSeries]:
        return [QSeries.zero(order)] + [
            z_eval(t_circledast(phi, tails[i]), order) for i in range(1, m)
        ]

    lhs = _convolve(factors(phi_v), factors(phi_w), m, order)
    merged = s_inverse(harmonic_star(s_map(v), s_map(w)))
    rhs = -z_eval(t_circledast(phi_t_map(merged), tails[m]), order)
    return lhs, rhs


def verify_kawashima(m: int, v: NcPoly, w: NcPoly, order: int) -> VerificationReport:
    lhs, rhs = kawashima_sides(m, v, w, order)
    params = {"m": m, "v": v.render(letters=True), "w": w.render(letters=True), "N": order}
    return compare_series("kawashima", params, lhs, rhs)


def _z0(poly: NcPoly, order: int) -> QSeries:
    return z_eval(poly, order).subs_t(0)


def verify_kawashima_t0(
    m: int, v: NcPoly, w: NcPoly, order: int
) -> VerificationReport:
    """At t = 0 both sides must match the undeformed identity
    sum Z0(phi(v) o* y^i) Z0(phi(w) o* y^j) = Z0(phi(v * w) o* y^m),
    the sign of the right hand side being absorbed by phi_0 = -phi."""
    _check(m, v, w)
    params = {"m": m, "v": v.render(letters=True), "w": w.render(letters=True), "N": order}
    powers = [NcPoly.zero()] + [NcPoly.word(Y * i) for i in range(1, m + 1)]

    def factors(phi: NcPoly) -> list[QSeries]:
        return [QSeries.zero(order)] + [
            _z0(circledast(phi, powers[i]), order) for i in range(1, m)
        ]

    lhs0 = _convolve(factors(phi_map(v)), factors(phi_map(w)), m, order)
    rhs0 = _z0(circledast(phi_map(harmonic_star(v, w)), powers[m]), order)
    lhs, rhs = kawashima_sides(m, v, w, order)
    for stage, left, right in (
        ("lhs", lhs.subs_t(0), lhs0),
        ("rhs", rhs.subs_t(0), rhs0),
        ("identity", lhs0, rhs0),
    ):
        report = compare_series("kawashima-t0", {**params, "stage": stage}, left, right)
        if not report.passed:
            return report
    return VerificationReport(relation="kawashima-t0", params=params, status="pass")
