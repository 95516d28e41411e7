"""The Hoffman type relation from the derivation d1"""

from __future__ import annotations

from tqmzv.algebra.coefficients import HBAR, ONE, T, CoefPoly
from tqmzv.algebra.maps import d1_derivation, s_inverse, s_map
from tqmzv.algebra.ncpoly import NcPoly
from tqmzv.algebra.words import Index, z
from tqmzv.models import VerificationReport
from tqmzv.relations._compare import compare_zero
from tqmzv.series.evaluation import z_eval

# the display reads both merge sums over i = 1 .. l-1
DISPLAY_READING = "i<=l-1"


def _word(parts) -> str:
    return "".join(z(k) for k in parts)


def hoffman_kernel_element(index: Index) -> NcPoly:
    """S^-1 d1 S(z_k1 ... z_kl)"""
    index.require_admissible()
    return s_inverse(d1_derivation(s_map(NcPoly.word(index.word()))))


def hoffman_display_element(index: Index) -> NcPoly:
    """The expanded relation moved to one side, with h standing for 1 - q."""
    index.require_admissible()
    parts = index.parts
    l = index.depth
    t_t_minus_1 = T * T - T
    acc: dict[str, CoefPoly] = {}

    def add(word_parts, coefficient):
        word = _word(word_parts)
        acc[word] = acc.get(word, CoefPoly()) + coefficient

    for i, k_i in enumerate(parts):
        head, tail = parts[:i], parts[i + 1 :]
        for j in range(k_i - 1):
            add(head + (k_i - j, j + 1) + tail, ONE)
        delta = 1 if i == l - 1 else 0
        add(head + (k_i + 1,) + tail, -(ONE + T * (k_i - 2 + delta)))
        add(parts, -(T * HBAR * (k_i - 1)))
        if i < l - 1:
            merged = head + (k_i + parts[i + 1],) + parts[i + 2 :]
            add(head + (k_i + parts[i + 1] + 1,) + parts[i + 2 :], -t_t_minus_1)
            add(merged, -(t_t_minus_1 * HBAR))
    return NcPoly(acc)


def verify_hoffman(index: Index, order: int) -> VerificationReport:
    element = hoffman_kernel_element(index)
    return compare_zero("hoffman", {"index": str(index), "N": order}, z_eval(element, order))


def verify_hoffman_display(index: Index, order: int) -> VerificationReport:
    display = hoffman_display_element(index)
    params = {
        "index": str(index),
        "N": order,
        "reading": DISPLAY_READING,
        "matches_kernel": display == hoffman_kernel_element(index),
    }
    return compare_zero("hoffman-display", params, z_eval(display, order))
