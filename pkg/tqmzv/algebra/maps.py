"""Interpolation maps S, gamma, phi and friends on the word algebra.

Every map that depends on the interpolation parameter takes ``s`` (a
CoefPoly scalar, the variable t by default) so the same code yields the
maps at t, -t, 0 or 1.
"""

from __future__ import annotations

import logging
from functools import lru_cache

from tqmzv import config
from tqmzv.algebra.circ import circ_letter
from tqmzv.algebra.coefficients import HBAR, ONE, T, CoefPoly
from tqmzv.algebra.memo import memoized
from tqmzv.algebra.ncpoly import NcPoly, add_term
from tqmzv.algebra.words import X, Y, render_word, split_first
from tqmzv.exceptions import InverseMismatchError, NotInSubspaceError

logger = logging.getLogger(__name__)


def _param(s: object) -> CoefPoly:
    return CoefPoly.coerce(s)


@memoized
def _s_word(word: str, s: CoefPoly) -> NcPoly:
    if Y not in word:
        # x^m, including the unit word, is fixed
        return NcPoly.word(word)
    if word[-1] != Y:
        raise NotInSubspaceError(
            f"S is not defined on {render_word(word, letters=True)!r}", word, "H1"
        )
    k, rest = split_first(word)
    tail = _s_word(rest, s)
    return tail.prefixed(word[:k]) + circ_letter(k, tail).scale(s)


def s_map(w: NcPoly, s: object = T) -> NcPoly:
    """S(z_k w) = z_k S(w) + s z_k o+ S(w), S(1) = 1."""
    s = _param(s)
    return w.linear(lambda word: _s_word(word, s))


@memoized
def _s_inverse_word(word: str, s: CoefPoly) -> NcPoly:
    image = _s_word(word, s)
    remainder = image - NcPoly.word(word)
    # S(w) - w only has words of strictly smaller depth
    return NcPoly.word(word) - remainder.linear(lambda v: _s_inverse_word(v, s))


def s_inverse_triangular(w: NcPoly, s: object = T) -> NcPoly:
    s = _param(s)
    return w.linear(lambda word: _s_inverse_word(word, s))


def s_inverse_fast(w: NcPoly, s: object = T) -> NcPoly:
    return s_map(w, -_param(s))


def s_inverse(w: NcPoly, s: object = T, check: bool | None = None) -> NcPoly:
    """Inverse of ``s_map``; ``check`` compares both constructions."""
    result = s_inverse_fast(w, s)
    if config.CHECK_INVERSE if check is None else check:
        for word, _ in w.items():
            fast = s_inverse_fast(NcPoly.word(word), s)
            slow = s_inverse_triangular(NcPoly.word(word), s)
            if fast != slow:
                logger.error("inverse mismatch on %s", word)
                raise InverseMismatchError(
                    f"the inverse constructions of S disagree on {word!r}", word
                )
    return result


def _substitution(images: dict[str, NcPoly]):
    @lru_cache(maxsize=config.MEMO_SIZE)
    def on_word(word: str) -> NcPoly:
        if not word:
            return NcPoly.one()
        return on_word(word[:-1]).concat(images[word[-1]])

    return on_word


@memoized
def _gamma_on_word(s: CoefPoly):
    y_image = NcPoly._wrap({X: s, Y: ONE, "": HBAR * s}) if s else NcPoly.word(Y)
    return _substitution({X: NcPoly.word(X), Y: y_image})


def gamma_map(w: NcPoly, s: object = T) -> NcPoly:
    """The automorphism x -> x, y -> s x + y + h s."""
    return w.linear(_gamma_on_word(_param(s)))


def gamma_inverse(w: NcPoly, s: object = T) -> NcPoly:
    return gamma_map(w, -_param(s))


_phi_on_word = _substitution(
    {X: NcPoly._wrap({X: ONE, Y: ONE}), Y: NcPoly._wrap({Y: -ONE})}
)


def phi_map(w: NcPoly) -> NcPoly:
    """The involution x -> x + y, y -> -y."""
    return w.linear(_phi_on_word)


def phi_t_map(w: NcPoly, s: object = T) -> NcPoly:
    """-S^-1 phi S"""
    return -s_inverse(phi_map(s_map(w, s)), s)


@memoized
def _d1_word(word: str) -> NcPoly:
    acc = {}
    for i, letter in enumerate(word):
        coefficient = ONE if letter == X else -ONE
        add_term(acc, word[:i] + X + Y + word[i + 1 :], coefficient)
    return NcPoly._wrap(acc)


def d1_derivation(w: NcPoly) -> NcPoly:
    """The derivation with d1(x) = -d1(y) = xy."""
    return w.linear(_d1_word)


def left_mult_x(w: NcPoly) -> NcPoly:
    return w.prefixed(X)


def y_power_inverse(i: int, s: object = T) -> NcPoly:
    """(-s x + y - h s)^(i-1) y, the image of y^i under the inverse of S"""
    s = _param(s)
    base = NcPoly._wrap({X: -s, Y: ONE, "": -(HBAR * s)}) if s else NcPoly.word(Y)
    return (base ** (i - 1)).suffixed(Y)
