"""Turns series or symbolic comparisons into verification reports"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any, Callable, Iterable

from tqmzv.algebra.coefficients import Rational, as_rational, format_rational
from tqmzv.algebra.ncpoly import NcPoly
from tqmzv.models import FirstDiff, VerificationReport
from tqmzv.series.qseries import QSeries

logger = logging.getLogger(__name__)


def compare_series(
    relation: str, params: dict[str, Any], lhs: QSeries, rhs: QSeries
) -> VerificationReport:
    difference = lhs.first_difference(rhs)
    if difference is None:
        logger.debug("%s %s passed", relation, params)
        return VerificationReport(relation=relation, params=params, status="pass")
    power, left, right = difference
    logger.warning(
        "%s %s failed at q^%i: %s != %s", relation, params, power, left, right
    )
    return VerificationReport(
        relation=relation,
        params=params,
        status="fail",
        first_diff=FirstDiff(q_power=power, lhs=left.to_json(), rhs=right.to_json()),
    )


def compare_zero(
    relation: str, params: dict[str, Any], series: QSeries
) -> VerificationReport:
    return compare_series(relation, params, series, QSeries.zero(series.order))


def compare_symbolic(
    relation: str, params: dict[str, Any], lhs: NcPoly, rhs: NcPoly
) -> VerificationReport:
    if lhs == rhs:
        logger.debug("%s %s passed", relation, params)
        return VerificationReport(relation=relation, params=params, status="pass")
    difference = lhs - rhs
    logger.warning("%s %s failed, lhs - rhs = %s", relation, params, difference)
    return VerificationReport(
        relation=relation,
        params={**params, "difference": difference.render(letters=True)},
        status="fail",
    )


def aggregate(
    relation: str,
    params: dict[str, Any],
    checks: Iterable[tuple[dict[str, Any], NcPoly, NcPoly]],
) -> VerificationReport:
    """One report for a family of symbolic checks; stops at the first
    failing instance and records it as the witness."""
    count = 0
    for witness, lhs, rhs in checks:
        count += 1
        if lhs != rhs:
            report = compare_symbolic(relation, {**params, "witness": witness}, lhs, rhs)
            report.params["checked"] = count
            return report
    logger.info("%s: %i instances passed", relation, count)
    return VerificationReport(
        relation=relation, params={**params, "checked": count}, status="pass"
    )


COHERENCE_VALUES = (0, 1, 2, Fraction(-1, 2))


def compare_coherence(
    relation: str,
    params: dict[str, Any],
    generic: QSeries,
    evaluate_at: Callable[[Rational], QSeries],
    values: Iterable = COHERENCE_VALUES,
) -> VerificationReport:
    """Compare the series computed with t fixed to each value against the
    generic series with that value substituted afterwards."""
    values = tuple(as_rational(value) for value in values)
    for value in values:
        report = compare_series(
            relation,
            {**params, "t": format_rational(value)},
            evaluate_at(value),
            generic.subs_t(value),
        )
        if not report.passed:
            return report
    return VerificationReport(
        relation=relation,
        params={**params, "t": [format_rational(as_rational(v)) for v in values]},
        status="pass",
    )
