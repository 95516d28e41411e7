"""The cyclic sum formula, evaluated directly and through its kernel element"""

from __future__ import annotations

from math import comb

from tqmzv.algebra.cyclic import csf_explicit_element, csf_kernel_element
from tqmzv.algebra.words import Index
from tqmzv.exceptions import InvalidIndexError
from tqmzv.models import VerificationReport
from tqmzv.relations._compare import compare_series, compare_symbolic, compare_zero
from tqmzv.series.evaluation import z_eval
from tqmzv.series.qseries import QSeries
from tqmzv.series.tpoly import TPoly
from tqmzv.series.zeta import zeta_q_t_direct


def _zeta_t(parts: tuple[int, ...], order: int) -> QSeries:
    return zeta_q_t_direct(Index(parts), order)


def cyclic_sum_sides(index: Index, order: int) -> tuple[QSeries, QSeries]:
    if index.is_all_ones():
        raise InvalidIndexError(
            f"the cyclic sum formula excludes the all-ones index ({index})",
            index.parts,
        )
    parts = index.parts
    k, l = index.weight, index.depth
    lhs = QSeries.zero(order)
    rotated = QSeries.zero(order)
    for i, k_i in enumerate(parts):
        rest = parts[i + 1 :] + parts[:i]
        for j in range(k_i - 1):
            lhs = lhs + _zeta_t((k_i - j,) + rest + (j + 1,), order)
        rotated = rotated + _zeta_t((k_i + 1,) + rest, order)
    rhs = rotated * TPoly({0: 1, 1: -1})
    tail = QSeries.zero(order)
    for i in range(l + 1):
        one_minus_q = QSeries(order, [(-1) ** j * comb(i, j) for j in range(i + 1)])
        tail = tail + one_minus_q * _zeta_t((k - i + 1,), order) * ((k - i) * comb(l, i))
    rhs = rhs + tail * TPoly({l: 1})
    return lhs, rhs


def verify_cyclic_sum(index: Index, order: int) -> VerificationReport:
    lhs, rhs = cyclic_sum_sides(index, order)
    return compare_series("csf", {"index": str(index), "N": order}, lhs, rhs)


def verify_cyclic_sum_symbolic(index: Index, order: int) -> VerificationReport:
    """Z of the kernel element rho_1(gamma(w) - t^l x^(k-l) (x + h)^l) is 0."""
    params = {"index": str(index), "N": order}
    element = csf_kernel_element(index)
    structure = compare_symbolic(
        "csf-kernel", {**params, "stage": "explicit"}, element, csf_explicit_element(index)
    )
    if not structure.passed:
        return structure
    return compare_zero("csf-kernel", params, z_eval(element, order))
