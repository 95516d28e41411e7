"""Exhaustive symbolic checks of the structural identities behind the relations.

Each family is a generator of ``(witness, lhs, rhs)`` triples over a finite
grid of words; ``verify_lemma`` folds one family into a single report.
"""

from __future__ import annotations

import logging
from itertools import product
from typing import Callable, Iterator

from tqmzv.algebra.circ import circ_action, z_circ_z
from tqmzv.algebra.coefficients import HBAR, ONE, T
from tqmzv.algebra.cyclic import (
    csf_explicit_element,
    csf_kernel_element,
    cyclic_rotations,
    rho1_closed_form,
    rho_map,
    rho_map_at_zero,
)
from tqmzv.algebra.maps import (
    gamma_map,
    left_mult_x,
    s_inverse_fast,
    s_inverse_triangular,
    s_map,
)
from tqmzv.algebra.ncpoly import NcPoly
from tqmzv.algebra.products import harmonic_star_plus, t_harmonic
from tqmzv.algebra.words import X, Y, render_word, split_first, z
from tqmzv.exceptions import DomainError
from tqmzv.models import VerificationReport
from tqmzv.relations._compare import aggregate
from tqmzv.relations.hoffman import hoffman_display_element, hoffman_kernel_element
from tqmzv.utils.enumerate import enumerate_indices, enumerate_words

logger = logging.getLogger(__name__)

Check = tuple[dict, NcPoly, NcPoly]

LETTER_RANGE = range(1, 4)


def _w(word: str) -> NcPoly:
    return NcPoly.word(word)


def _name(word: str) -> str:
    return render_word(word, letters=True)


def _grid(max_weight: int) -> int:
    """word weight for the families quantifying over three free objects"""
    return min(3, max_weight - 1)


def _gamma_z(k: int) -> NcPoly:
    return gamma_map(_w(z(k)))


def s_commutes_with_circ(max_weight: int) -> Iterator[Check]:
    for a, word in product(range(1, 5), enumerate_words(max_weight, "H1")):
        letter = _w(z(a))
        yield (
            {"a": a, "w": _name(word)},
            s_map(circ_action(letter, _w(word))),
            circ_action(letter, s_map(_w(word))),
        )


def s_of_wy_is_gamma(max_weight: int) -> Iterator[Check]:
    for word in enumerate_words(max_weight):
        yield {"w": _name(word)}, s_map(_w(word + Y)), gamma_map(_w(word)).suffixed(Y)


def star_plus_gamma_left(max_weight: int) -> Iterator[Check]:
    """g(z_k) v *+ z_l w with v in H y, w in H^1"""
    size = _grid(max_weight)
    for k, l in product(LETTER_RANGE, repeat=2):
        gk, zl = _gamma_z(k), _w(z(l))
        for v, w in product(
            enumerate_words(size, "Hy"), enumerate_words(size, "H1")
        ):
            pv, pw = _w(v), _w(w)
            lhs = harmonic_star_plus(gk * pv, zl * pw)
            rhs = (
                gk * harmonic_star_plus(pv, zl * pw)
                + zl * harmonic_star_plus(gk * pv, pw)
                + (z_circ_z(k, l) * harmonic_star_plus(pv, pw)).scale(ONE - T)
            )
            yield {"k": k, "l": l, "v": _name(v), "w": _name(w)}, lhs, rhs


def star_plus_s_left(max_weight: int) -> Iterator[Check]:
    """S(z_k v) *+ z_l w with v, w in H^1, the unit word included"""
    size = _grid(max_weight)
    for k, l in product(LETTER_RANGE, repeat=2):
        gk, zl = _gamma_z(k), _w(z(l))
        for v, w in product(enumerate_words(size, "H1"), repeat=2):
            sv, pw = s_map(_w(v)), _w(w)
            szkv = s_map(_w(z(k) + v))
            lhs = harmonic_star_plus(szkv, zl * pw)
            rhs = (
                gk * harmonic_star_plus(sv, zl * pw)
                + zl * harmonic_star_plus(szkv, pw)
                + (z_circ_z(k, l) * harmonic_star_plus(sv, pw)).scale(ONE - T)
            )
            yield {"k": k, "l": l, "v": _name(v), "w": _name(w)}, lhs, rhs


def star_plus_gamma_right(max_weight: int) -> Iterator[Check]:
    """x^k v *+ g(z_l) w with v = z_p V and w in H y, k >= 0"""
    size = _grid(max_weight)
    for k, l in product(range(0, 4), LETTER_RANGE):
        gl = _gamma_z(l)
        for v, w in product(enumerate_words(size, "Hy"), repeat=2):
            p, rest = split_first(v)
            xv, pw, big_v = _w(X * k + v), _w(w), _w(rest)
            lhs = harmonic_star_plus(xv, gl * pw)
            rhs = (
                _w(z(k + p)) * harmonic_star_plus(big_v, gl * pw)
                + gl * harmonic_star_plus(xv, pw)
                + (z_circ_z(k + p, l) * harmonic_star_plus(big_v, pw)).scale(ONE - T)
            )
            yield {"k": k, "l": l, "v": _name(v), "w": _name(w)}, lhs, rhs


def star_plus_two_gamma(max_weight: int) -> Iterator[Check]:
    """g(z_k) v *+ g(z_l) w with v, w in H y"""
    size = _grid(max_weight)
    for k, l in product(LETTER_RANGE, repeat=2):
        gk, gl = _gamma_z(k), _gamma_z(l)
        x_block = (_w(X * k) + _w(X * (k - 1)).scale(HBAR)).scale(-T)
        glue = x_block * gl + z_circ_z(k, l).scale(ONE - T)
        for v, w in product(enumerate_words(size, "Hy"), repeat=2):
            pv, pw = _w(v), _w(w)
            lhs = harmonic_star_plus(gk * pv, gl * pw)
            rhs = (
                gk * harmonic_star_plus(pv, gl * pw)
                + gl * harmonic_star_plus(gk * pv, pw)
                + glue * harmonic_star_plus(pv, pw)
            )
            yield {"k": k, "l": l, "v": _name(v), "w": _name(w)}, lhs, rhs


def t_harmonic_conjugation(max_weight: int) -> Iterator[Check]:
    """v t* w = S^-1(S(v) *+ S(w)) over unordered pairs"""
    words = list(enumerate_words(max_weight, "H1"))
    for i, v in enumerate(words):
        for w in words[i:]:
            pv, pw = _w(v), _w(w)
            yield (
                {"v": _name(v), "w": _name(w)},
                t_harmonic(pv, pw),
                s_inverse_fast(harmonic_star_plus(s_map(pv), s_map(pw))),
            )


def rho_at_zero(max_weight: int) -> Iterator[Check]:
    for n, word in product(range(1, 4), enumerate_words(max_weight)):
        expected = s_map(rho_map(n, _w(word)))
        witness = {"n": n, "w": _name(word)}
        yield {**witness, "route": "rebuilt"}, rho_map_at_zero(n, _w(word)), expected
        yield (
            {**witness, "route": "substituted"},
            rho_map_at_zero(n, _w(word), by_substitution=True),
            expected,
        )


def rho_cyclic_invariance(max_weight: int) -> Iterator[Check]:
    for word in enumerate_words(max_weight, min_weight=1):
        image = rho_map(1, _w(word))
        for rotated in cyclic_rotations(word)[1:]:
            yield {"w": _name(word), "rotation": _name(rotated)}, rho_map(1, _w(rotated)), image


def rho1_matches_closed_form(max_weight: int) -> Iterator[Check]:
    for word in enumerate_words(max_weight, min_weight=1):
        yield {"w": _name(word)}, rho_map(1, _w(word)), rho1_closed_form(word)


def s_commutes_with_left_x(max_weight: int) -> Iterator[Check]:
    for word in enumerate_words(max_weight, "H1"):
        pw = _w(word)
        yield {"w": _name(word)}, s_map(left_mult_x(pw)), left_mult_x(s_map(pw))


def s_inverse_coherence(max_weight: int) -> Iterator[Check]:
    for word in enumerate_words(max_weight, "H1"):
        pw = _w(word)
        witness = {"w": _name(word)}
        yield {**witness, "stage": "constructions"}, s_inverse_triangular(pw), s_inverse_fast(pw)
        yield {**witness, "stage": "left"}, s_inverse_triangular(s_map(pw)), pw
        yield {**witness, "stage": "right"}, s_map(s_inverse_triangular(pw)), pw


def s_one_parameter_group(max_weight: int) -> Iterator[Check]:
    """S_s S_s' = S_(s + s')"""
    pairs = ((T, T), (T, -T), (T, ONE), (ONE, -T))
    for (s, s2), word in product(pairs, enumerate_words(max_weight, "H1")):
        pw = _w(word)
        yield (
            {"s": str(s), "s'": str(s2), "w": _name(word)},
            s_map(s_map(pw, s), s2),
            s_map(pw, s + s2),
        )


def csf_kernel_explicit(max_weight: int) -> Iterator[Check]:
    for index in enumerate_indices(max_weight, admissible=False, exclude_all_ones=True):
        yield {"index": str(index)}, csf_kernel_element(index), csf_explicit_element(index)


def hoffman_display_structure(max_weight: int) -> Iterator[Check]:
    for index in enumerate_indices(max_weight):
        yield (
            {"index": str(index)},
            hoffman_display_element(index),
            hoffman_kernel_element(index),
        )


FAMILIES: dict[str, Callable[[int], Iterator[Check]]] = {
    "s-commutes-with-circ": s_commutes_with_circ,
    "s-of-wy-is-gamma": s_of_wy_is_gamma,
    "star-plus-gamma-left": star_plus_gamma_left,
    "star-plus-s-left": star_plus_s_left,
    "star-plus-gamma-right": star_plus_gamma_right,
    "star-plus-two-gamma": star_plus_two_gamma,
    "t-harmonic-conjugation": t_harmonic_conjugation,
    "rho-at-zero": rho_at_zero,
    "rho-cyclic-invariance": rho_cyclic_invariance,
    "rho1-closed-form": rho1_matches_closed_form,
    "s-commutes-with-left-x": s_commutes_with_left_x,
    "s-inverse-coherence": s_inverse_coherence,
    "s-one-parameter-group": s_one_parameter_group,
    "csf-kernel-explicit": csf_kernel_explicit,
    "hoffman-display-structure": hoffman_display_structure,
}


def verify_lemma(name: str, max_weight: int) -> VerificationReport:
    if name not in FAMILIES:
        raise DomainError(f"unknown lemma family {name!r}", name)
    if max_weight < 2:
        raise DomainError(f"the lemma suite needs max_weight >= 2, got {max_weight}", max_weight)
    logger.debug("checking %s up to weight %i", name, max_weight)
    return aggregate(name, {"max_weight": max_weight}, FAMILIES[name](max_weight))


def verify_lemma_suite(max_weight: int) -> list[VerificationReport]:
    return [verify_lemma(name, max_weight) for name in FAMILIES]
