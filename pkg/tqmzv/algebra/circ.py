"""The product on the span of the letters z_j and its action on H^1"""

from __future__ import annotations

from tqmzv.algebra.coefficients import HBAR, ONE
from tqmzv.algebra.memo import memoized
from tqmzv.algebra.ncpoly import NcPoly, add_term
from tqmzv.algebra.words import split_first, z


@memoized
def z_circ_z(i: int, j: int) -> NcPoly:
    """z_i o+ z_j = z_(i+j) + h z_(i+j-1)"""
    return NcPoly._wrap({z(i + j): ONE, z(i + j - 1): HBAR})


def circ_letter(i: int, poly: NcPoly) -> NcPoly:
    """z_i o+ poly for ``poly`` in H^1 (no checks)."""
    acc = {}
    for word, coefficient in poly.items():
        if not word:
            continue
        k, rest = split_first(word)
        add_term(acc, z(i + k) + rest, coefficient)
        add_term(acc, z(i + k - 1) + rest, coefficient * HBAR)
    return NcPoly._wrap(acc)


def circ_pair_on(i: int, j: int, poly: NcPoly) -> NcPoly:
    """(z_i o+ z_j) o+ poly"""
    return circ_letter(i + j, poly) + circ_letter(i + j - 1, poly).scale(HBAR)


def _letters(a: NcPoly) -> list[tuple[int, object]]:
    a.require("z")
    return [(len(word), coefficient) for word, coefficient in a.items()]


def circ_plus(a: NcPoly, b: NcPoly) -> NcPoly:
    acc = {}
    for i, c1 in _letters(a):
        for j, c2 in _letters(b):
            for word, c in z_circ_z(i, j).items():
                add_term(acc, word, c * c1 * c2)
    return NcPoly._wrap(acc)


def circ_action(a: NcPoly, w: NcPoly) -> NcPoly:
    w.require("H1")
    return NcPoly.sum(circ_letter(i, w).scale(c) for i, c in _letters(a))
