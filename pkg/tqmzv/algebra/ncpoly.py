"""The word algebra H over Q[h, t]: sparse noncommutative polynomials in x, y"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Mapping

from pydantic import TypeAdapter

from tqmzv.algebra.coefficients import ONE, ZERO, CoefPoly
from tqmzv.algebra.words import (
    SUBSPACES,
    parse_word,
    render_word,
    require,
    word_sort_key,
)
from tqmzv.exceptions import DomainError
from tqmzv.models.records import NcPolyTerm

_TERMS = TypeAdapter(list[NcPolyTerm])


def add_term(acc: dict[str, CoefPoly], word: str, coefficient: CoefPoly) -> None:
    """in-place ``acc[word] += coefficient`` with zero pruning"""
    if not coefficient:
        return
    current = acc.get(word)
    if current is None:
        acc[word] = coefficient
        return
    total = current + coefficient
    if total:
        acc[word] = total
    else:
        del acc[word]


class NcPoly:
    """Immutable finite sum of words with CoefPoly coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[str, object] | None = None):
        acc: dict[str, CoefPoly] = {}
        for word, coefficient in (terms or {}).items():
            add_term(acc, word, CoefPoly.coerce(coefficient))
        self._terms = acc
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict[str, CoefPoly]) -> "NcPoly":
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls) -> "NcPoly":
        return cls._wrap({})

    @classmethod
    def one(cls) -> "NcPoly":
        return cls._wrap({"": ONE})

    @classmethod
    def word(cls, word: str, coefficient: object = ONE) -> "NcPoly":
        coefficient = CoefPoly.coerce(coefficient)
        return cls._wrap({word: coefficient} if coefficient else {})

    @classmethod
    def scalar(cls, coefficient: object) -> "NcPoly":
        return cls.word("", coefficient)

    @classmethod
    def coerce(cls, value: object) -> "NcPoly":
        if isinstance(value, NcPoly):
            return value
        if isinstance(value, str):
            return cls.word(parse_word(value))
        return cls.scalar(value)

    @classmethod
    def sum(cls, polys: Iterable["NcPoly"]) -> "NcPoly":
        acc: dict[str, CoefPoly] = {}
        for poly in polys:
            for word, coefficient in poly._terms.items():
                add_term(acc, word, coefficient)
        return cls._wrap(acc)

    def items(self) -> Iterable[tuple[str, CoefPoly]]:
        return self._terms.items()

    def words(self) -> Iterable[str]:
        return self._terms.keys()

    def coefficient(self, word: str) -> CoefPoly:
        return self._terms.get(word, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[str, CoefPoly]]:
        return iter(self.sorted_terms())

    def __add__(self, other: object) -> "NcPoly":
        if not isinstance(other, NcPoly):
            try:
                other = NcPoly.coerce(other)
            except TypeError:
                return NotImplemented
        if not other._terms:
            return self
        acc = dict(self._terms)
        for word, coefficient in other._terms.items():
            add_term(acc, word, coefficient)
        return NcPoly._wrap(acc)

    __radd__ = __add__

    def __neg__(self) -> "NcPoly":
        return NcPoly._wrap({word: -c for word, c in self._terms.items()})

    def __sub__(self, other: object) -> "NcPoly":
        if not isinstance(other, NcPoly):
            try:
                other = NcPoly.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "NcPoly":
        return (-self) + other

    def scale(self, coefficient: object) -> "NcPoly":
        coefficient = CoefPoly.coerce(coefficient)
        if not coefficient:
            return NcPoly.zero()
        acc: dict[str, CoefPoly] = {}
        for word, c in self._terms.items():
            add_term(acc, word, c * coefficient)
        return NcPoly._wrap(acc)

    def concat(self, other: "NcPoly") -> "NcPoly":
        acc: dict[str, CoefPoly] = {}
        for left, c1 in self._terms.items():
            for right, c2 in other._terms.items():
                add_term(acc, left + right, c1 * c2)
        return NcPoly._wrap(acc)

    def __mul__(self, other: object) -> "NcPoly":
        if isinstance(other, NcPoly):
            return self.concat(other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other: object) -> "NcPoly":
        # scalars commute with words
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, exponent: int) -> "NcPoly":
        result = NcPoly.one()
        for _ in range(exponent):
            result = result.concat(self)
        return result

    def prefixed(self, prefix: str) -> "NcPoly":
        return NcPoly._wrap({prefix + w: c for w, c in self._terms.items()})

    def suffixed(self, suffix: str) -> "NcPoly":
        return NcPoly._wrap({w + suffix: c for w, c in self._terms.items()})

    def linear(self, word_map: Callable[[str], "NcPoly"]) -> "NcPoly":
        """Extend a map on words Q[h, t]-linearly."""
        acc: dict[str, CoefPoly] = {}
        for word, coefficient in self._terms.items():
            for image_word, image_coefficient in word_map(word)._terms.items():
                add_term(acc, image_word, coefficient * image_coefficient)
        return NcPoly._wrap(acc)

    def map_coefficients(self, fn: Callable[[CoefPoly], CoefPoly]) -> "NcPoly":
        acc: dict[str, CoefPoly] = {}
        for word, coefficient in self._terms.items():
            add_term(acc, word, fn(coefficient))
        return NcPoly._wrap(acc)

    def subs_t(self, value: object) -> "NcPoly":
        return self.map_coefficients(lambda c: c.subs_t(value))

    def subs_hbar(self, value: object) -> "NcPoly":
        return self.map_coefficients(lambda c: c.subs_hbar(value))

    def hbar_degree(self) -> int:
        return max((c.hbar_degree() for c in self._terms.values()), default=-1)

    def gradings(self) -> set[int]:
        """every value of weight + h-degree carried by a term"""
        return {
            len(word) + deg_h
            for word, coefficient in self._terms.items()
            for (deg_h, _) in coefficient.terms
        }

    def is_in(self, subspace: str) -> bool:
        check = SUBSPACES[subspace]
        return all(check(word) for word in self._terms)

    def require(self, subspace: str) -> "NcPoly":
        for word in self._terms:
            require(word, subspace)
        return self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NcPoly):
            return self._terms == other._terms
        try:
            return self._terms == NcPoly.coerce(other)._terms
        except (TypeError, DomainError):
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sorted_terms(self) -> list[tuple[str, CoefPoly]]:
        return sorted(self._terms.items(), key=lambda item: word_sort_key(item[0]))

    def render(self, letters: bool = False) -> str:
        """One monomial per term: ``h^1*t^1*z[2] + t^1*z[3] + z[2,1]``."""
        pieces: list[str] = []
        for word, coefficient in self.sorted_terms():
            for (deg_h, deg_t), value in coefficient.sorted_terms():
                monomial = CoefPoly.monomial(abs(value), deg_h, deg_t)
                factors = [] if monomial == ONE else [str(monomial)]
                if word or not factors:
                    factors.append(render_word(word, letters))
                body = "*".join(factors)
                if not pieces:
                    pieces.append(f"-{body}" if value < 0 else body)
                else:
                    pieces.append(f"- {body}" if value < 0 else f"+ {body}")
        return " ".join(pieces) if pieces else "0"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"NcPoly({self.render(letters=True)!r})"

    def to_json(self) -> list[dict]:
        return [
            {"word": word, "coeff": coefficient.to_json()}
            for word, coefficient in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: object) -> "NcPoly":
        acc: dict[str, CoefPoly] = {}
        for term in _TERMS.validate_python(data):
            add_term(acc, term.word, CoefPoly.from_json(term.coeff))
        return cls._wrap(acc)
