"""The cyclic operators C, M and rho and the cyclic sum kernel elements"""

from __future__ import annotations

from math import comb

from tqmzv.algebra.coefficients import HBAR, ONE, T, CoefPoly
from tqmzv.algebra.maps import gamma_inverse, gamma_map
from tqmzv.algebra.memo import memoized
from tqmzv.algebra.ncpoly import NcPoly
from tqmzv.algebra.tensor import TensorElem, m_map
from tqmzv.algebra.words import X, Y, Index, word_from_index, z
from tqmzv.exceptions import DomainError, InvalidIndexError


def _middle(s: CoefPoly) -> NcPoly:
    """(1 - s) x + y - h s"""
    return NcPoly({X: ONE - s, Y: ONE, "": -(HBAR * s)})


@memoized
def _c_word(n: int, word: str, s: CoefPoly) -> TensorElem:
    middle = [_middle(s)] * (n - 1)
    pieces = []
    for i, letter in enumerate(word):
        first = gamma_inverse(NcPoly.word(word[i + 1 :]), s).prefixed(X)
        last = gamma_inverse(NcPoly.word(word[:i]), s).suffixed(Y)
        term = TensorElem.from_factors([first, *middle, last])
        pieces.append(term if letter == X else -term)
    return TensorElem.sum(n + 1, pieces)


def c_map(n: int, w: NcPoly, s: object = T) -> TensorElem:
    """C_n with C(x) = -C(y) = x (x) mid^(n-1) (x) y, Leibniz over gamma^-1."""
    if n < 1:
        raise DomainError(f"C_n needs n >= 1, got {n}", n)
    s = CoefPoly.coerce(s)
    return TensorElem.sum(
        n + 1,
        (_c_word(n, word, s).scale(c) for word, c in w.items()),
    )


def rho_map(n: int, w: NcPoly, s: object = T) -> NcPoly:
    return m_map(c_map(n, w, s))


def rho_map_at_zero(n: int, w: NcPoly, by_substitution: bool = False) -> NcPoly:
    """rho_(n,0): rebuilt with s = 0, or rho_(n,t) with t -> 0."""
    if by_substitution:
        return rho_map(n, w).subs_t(0)
    return rho_map(n, w, 0)


def rho1_closed_form(word: str, s: object = T) -> NcPoly:
    """sum_i sgn(u_i) x gamma^-1(u_(i+1)...u_l u_1...u_(i-1)) y"""
    if not word:
        raise DomainError("the closed form needs a nonempty word", word)
    s = CoefPoly.coerce(s)
    pieces = []
    for i, letter in enumerate(word):
        rotated = word[i + 1 :] + word[:i]
        term = gamma_inverse(NcPoly.word(rotated), s).prefixed(X).suffixed(Y)
        pieces.append(term if letter == X else -term)
    return NcPoly.sum(pieces)


def cyclic_rotations(word: str) -> list[str]:
    if not word:
        raise DomainError("the empty word has no rotations", word)
    seen: dict[str, None] = {}
    for i in range(len(word)):
        seen.setdefault(word[i:] + word[:i])
    return list(seen)


def _require_not_all_ones(index: Index) -> None:
    if index.is_all_ones():
        raise InvalidIndexError(
            f"the cyclic sum formula excludes the all-ones index ({index})",
            index.parts,
        )


def csf_kernel_element(index: Index) -> NcPoly:
    """rho_1(gamma(z_k1...z_kl) - t^l x^(k-l) (x + h)^l)"""
    _require_not_all_ones(index)
    k, l = index.weight, index.depth
    correction = NcPoly.word(X * (k - l)).concat(
        NcPoly({X: ONE, "": HBAR}) ** l
    ).scale(T**l)
    return rho_map(1, gamma_map(NcPoly.word(word_from_index(index))) - correction)


def csf_explicit_element(index: Index) -> NcPoly:
    """The same kernel element written out as a sum of rotated z-words."""
    _require_not_all_ones(index)
    parts = index.parts
    k, l = index.weight, index.depth
    acc = NcPoly.zero()
    for i, k_i in enumerate(parts):
        rest = "".join(z(p) for p in parts[i + 1 :] + parts[:i])
        for j in range(k_i - 1):
            acc += NcPoly.word(z(k_i - j) + rest + z(j + 1))
        acc -= NcPoly.word(z(k_i + 1) + rest).scale(ONE - T)
    for i in range(l + 1):
        coefficient = CoefPoly.monomial((k - i) * comb(l, i), i, l)
        acc -= NcPoly.word(z(k - i + 1), coefficient)
    return acc
