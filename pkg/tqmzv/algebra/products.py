"""Quasi-shuffle products on H^1 and the circled products on H y.

Each product is computed on pairs of words by its defining recursion,
memoized on the pair, and extended bilinearly.
"""

from __future__ import annotations

from typing import Callable

from tqmzv.algebra.circ import circ_pair_on
from tqmzv.algebra.coefficients import HBAR, ONE, T
from tqmzv.algebra.maps import s_inverse, s_map
from tqmzv.algebra.memo import memoized
from tqmzv.algebra.ncpoly import NcPoly, add_term
from tqmzv.algebra.words import split_first, z

ONE_MINUS_2T = ONE - T * 2
T2_MINUS_T = T * T - T


def _bilinear(
    u: NcPoly, v: NcPoly, on_words: Callable[[str, str], NcPoly], subspace: str
) -> NcPoly:
    u.require(subspace)
    v.require(subspace)
    acc = {}
    for left, c1 in u.items():
        for right, c2 in v.items():
            coefficient = c1 * c2
            for word, c in on_words(left, right).items():
                add_term(acc, word, c * coefficient)
    return NcPoly._wrap(acc)


@memoized
def _star_words(u: str, v: str) -> NcPoly:
    if not u:
        return NcPoly.word(v)
    if not v:
        return NcPoly.word(u)
    i, rest_u = split_first(u)
    j, rest_v = split_first(v)
    return (
        _star_words(rest_u, v).prefixed(z(i))
        + _star_words(u, rest_v).prefixed(z(j))
        + _star_words(rest_u, rest_v).prefixed(z(i + j))
    )


@memoized
def _star_plus_words(u: str, v: str) -> NcPoly:
    if not u:
        return NcPoly.word(v)
    if not v:
        return NcPoly.word(u)
    i, rest_u = split_first(u)
    j, rest_v = split_first(v)
    inner = _star_plus_words(rest_u, rest_v)
    return (
        _star_plus_words(rest_u, v).prefixed(z(i))
        + _star_plus_words(u, rest_v).prefixed(z(j))
        + inner.prefixed(z(i + j))
        + inner.prefixed(z(i + j - 1)).scale(HBAR)
    )


@memoized
def _t_harmonic_words(u: str, v: str) -> NcPoly:
    if not u:
        return NcPoly.word(v)
    if not v:
        return NcPoly.word(u)
    i, rest_u = split_first(u)
    j, rest_v = split_first(v)
    inner = _t_harmonic_words(rest_u, rest_v)
    joined = inner.prefixed(z(i + j)) + inner.prefixed(z(i + j - 1)).scale(HBAR)
    return (
        _t_harmonic_words(rest_u, v).prefixed(z(i))
        + _t_harmonic_words(u, rest_v).prefixed(z(j))
        + joined.scale(ONE_MINUS_2T)
        + circ_pair_on(i, j, inner).scale(T2_MINUS_T)
    )


def harmonic_star(u: NcPoly, v: NcPoly) -> NcPoly:
    """Hoffman's product, join z_i z_j -> z_(i+j)."""
    return _bilinear(u, v, _star_words, "H1")


def harmonic_star_plus(u: NcPoly, v: NcPoly) -> NcPoly:
    return _bilinear(u, v, _star_plus_words, "H1")


def t_harmonic(u: NcPoly, v: NcPoly) -> NcPoly:
    """The interpolated harmonic product in t and h."""
    return _bilinear(u, v, _t_harmonic_words, "H1")


@memoized
def _circledast_words(u: str, v: str) -> NcPoly:
    i, rest_u = split_first(u)
    j, rest_v = split_first(v)
    return _star_plus_words(rest_u, rest_v).prefixed(z(i + j))


def circledast(u: NcPoly, v: NcPoly) -> NcPoly:
    """z_i u o* z_j v = z_(i+j) (u *+ v) on H y."""
    if u.is_zero() or v.is_zero():
        return NcPoly.zero()
    return _bilinear(u, v, _circledast_words, "Hy")


def t_circledast(u: NcPoly, v: NcPoly) -> NcPoly:
    """S^-1(S(u) o* S(v))"""
    u.require("Hy")
    v.require("Hy")
    return s_inverse(circledast(s_map(u), s_map(v)))


PRODUCTS: dict[str, Callable[[NcPoly, NcPoly], NcPoly]] = {
    "star": harmonic_star,
    "starplus": harmonic_star_plus,
    "tstar": t_harmonic,
    "cast": circledast,
    "tcast": t_circledast,
}
