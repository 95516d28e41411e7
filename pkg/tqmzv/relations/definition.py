"""Consistency of the evaluators with each other and with the definition"""

from __future__ import annotations

from tqmzv.algebra.ncpoly import NcPoly
from tqmzv.algebra.products import t_harmonic
from tqmzv.algebra.words import Index, render_word, require
from tqmzv.models import VerificationReport
from tqmzv.relations._compare import compare_coherence, compare_series
from tqmzv.series.evaluation import z_eval
from tqmzv.series.zeta import zeta_q, zeta_q_naive, zeta_q_star, zeta_q_t_direct


def _params(index: Index, order: int) -> dict:
    return {"index": str(index), "N": order}


def route_sides(index: Index, order: int):
    """(S route, filler route) for the word of the index"""
    word = NcPoly.word(index.require_admissible().word())
    return z_eval(word, order, route="s"), zeta_q_t_direct(index, order)


def verify_route_agreement(index: Index, order: int) -> VerificationReport:
    s_route, definition = route_sides(index, order)
    return compare_series("route-agreement", _params(index, order), s_route, definition)


def verify_specializations(index: Index, order: int) -> list[VerificationReport]:
    """t = 0 gives the plain series and t = 1 the star series."""
    series = zeta_q_t_direct(index, order)
    params = _params(index, order)
    return [
        compare_series("specialization-t0", params, series.subs_t(0), zeta_q(index, order)),
        compare_series(
            "specialization-t1", params, series.subs_t(1), zeta_q_star(index, order)
        ),
    ]


def verify_specialization_coherence(index: Index, order: int) -> VerificationReport:
    """S taken at a fixed t agrees with the generic filler series at that t."""
    word = NcPoly.word(index.require_admissible().word())
    return compare_coherence(
        "specialization-coherence",
        _params(index, order),
        zeta_q_t_direct(index, order),
        lambda value: z_eval(word, order, route="s", s=value),
    )


def verify_oracle(index: Index, order: int) -> list[VerificationReport]:
    params = _params(index, order)
    return [
        compare_series("oracle", params, zeta_q(index, order), zeta_q_naive(index, order)),
        compare_series(
            "oracle-star",
            params,
            zeta_q_star(index, order),
            zeta_q_naive(index, order, star=True),
        ),
    ]


TRUNCATION_MARGIN = 5

EVALUATORS = {
    "zeta": zeta_q,
    "star": zeta_q_star,
    "t": zeta_q_t_direct,
}


def verify_truncation(
    index: Index, order: int, margin: int = TRUNCATION_MARGIN
) -> VerificationReport:
    """Every evaluator at order N is the prefix of its result at N + margin."""
    params = {**_params(index, order), "higher": order + margin}
    index.require_admissible()
    for name, evaluate in EVALUATORS.items():
        report = compare_series(
            "truncation",
            {**params, "evaluator": name},
            evaluate(index, order + margin).truncate(order),
            evaluate(index, order),
        )
        if not report.passed:
            return report
    return VerificationReport(relation="truncation", params=params, status="pass")


def verify_harmonic_product(u: str, v: str, order: int) -> VerificationReport:
    require(u, "H0")
    require(v, "H0")
    left, right = NcPoly.word(u), NcPoly.word(v)
    return compare_series(
        "harmonic-product",
        {"u": render_word(u), "v": render_word(v), "N": order},
        z_eval(t_harmonic(left, right), order),
        z_eval(left, order) * z_eval(right, order),
    )
