"""Tensor powers of the word algebra with the diamond bimodule structure"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Mapping, Sequence

from pydantic import TypeAdapter

from tqmzv.algebra.coefficients import ONE, CoefPoly
from tqmzv.algebra.ncpoly import NcPoly, add_term
from tqmzv.algebra.words import render_word, word_sort_key
from tqmzv.exceptions import DomainError
from tqmzv.models.records import TensorTerm

Slots = tuple[str, ...]

_TERMS = TypeAdapter(list[TensorTerm])


class TensorElem:
    """A finite sum of (n+1)-tuples of words; keys all have ``arity`` slots."""

    __slots__ = ("arity", "_terms")

    def __init__(self, arity: int, terms: Mapping[Slots, object] | None = None):
        if arity < 2:
            raise DomainError("a tensor element needs at least two slots", arity)
        self.arity = arity
        acc: dict[Slots, CoefPoly] = {}
        for slots, coefficient in (terms or {}).items():
            slots = tuple(slots)
            if len(slots) != arity:
                raise DomainError(
                    f"expected {arity} slots, got {len(slots)}", slots
                )
            add_term(acc, slots, CoefPoly.coerce(coefficient))
        self._terms = acc

    @classmethod
    def _wrap(cls, arity: int, terms: dict[Slots, CoefPoly]) -> "TensorElem":
        elem = cls.__new__(cls)
        elem.arity = arity
        elem._terms = terms
        return elem

    @classmethod
    def from_factors(cls, factors: Sequence[NcPoly]) -> "TensorElem":
        """The pure tensor factors[0] (x) factors[1] (x) ..."""
        acc: dict[Slots, CoefPoly] = {}
        for combo in product(*(f.sorted_terms() for f in factors)):
            coefficient = ONE
            for _, c in combo:
                coefficient = coefficient * c
            add_term(acc, tuple(word for word, _ in combo), coefficient)
        return cls._wrap(len(factors), acc)

    @classmethod
    def sum(cls, arity: int, elems: Iterable["TensorElem"]) -> "TensorElem":
        acc: dict[Slots, CoefPoly] = {}
        for elem in elems:
            for slots, coefficient in elem._terms.items():
                add_term(acc, slots, coefficient)
        return cls._wrap(arity, acc)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check(self, other: "TensorElem") -> None:
        if other.arity != self.arity:
            raise DomainError(
                f"arity mismatch: {self.arity} and {other.arity}",
                (self.arity, other.arity),
            )

    def __add__(self, other: "TensorElem") -> "TensorElem":
        self._check(other)
        return TensorElem.sum(self.arity, (self, other))

    def __neg__(self) -> "TensorElem":
        return TensorElem._wrap(
            self.arity, {slots: -c for slots, c in self._terms.items()}
        )

    def __sub__(self, other: "TensorElem") -> "TensorElem":
        return self + (-other)

    def scale(self, coefficient: object) -> "TensorElem":
        coefficient = CoefPoly.coerce(coefficient)
        acc: dict[Slots, CoefPoly] = {}
        for slots, c in self._terms.items():
            add_term(acc, slots, c * coefficient)
        return TensorElem._wrap(self.arity, acc)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElem):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    __hash__ = None

    def sorted_terms(self) -> list[tuple[Slots, CoefPoly]]:
        return sorted(
            self._terms.items(),
            key=lambda item: tuple(word_sort_key(w) for w in item[0]),
        )

    def render(self, letters: bool = True) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for slots, coefficient in self.sorted_terms():
            tensor = " (x) ".join(render_word(w, letters) for w in slots)
            pieces.append(f"({coefficient})*[{tensor}]")
        return " + ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"TensorElem({self.arity}, {self.render()!r})"

    def to_json(self) -> list[dict]:
        return [
            {"slots": list(slots), "coeff": coefficient.to_json()}
            for slots, coefficient in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, arity: int, data: object) -> "TensorElem":
        terms = {}
        for term in _TERMS.validate_python(data):
            terms[tuple(term.slots)] = terms.get(
                tuple(term.slots), CoefPoly()
            ) + CoefPoly.from_json(term.coeff)
        return cls(arity, terms)


def diamond_left(a: NcPoly, elem: TensorElem) -> TensorElem:
    """a acts by left concatenation on the last slot."""
    acc: dict[Slots, CoefPoly] = {}
    for slots, c1 in elem.items():
        for word, c2 in a.items():
            add_term(acc, slots[:-1] + (word + slots[-1],), c1 * c2)
    return TensorElem._wrap(elem.arity, acc)


def diamond_right(elem: TensorElem, b: NcPoly) -> TensorElem:
    """b acts by right concatenation on the first slot."""
    acc: dict[Slots, CoefPoly] = {}
    for slots, c1 in elem.items():
        for word, c2 in b.items():
            add_term(acc, (slots[0] + word,) + slots[1:], c1 * c2)
    return TensorElem._wrap(elem.arity, acc)


def m_map(elem: TensorElem) -> NcPoly:
    """Multiply the slots together in order."""
    acc: dict[str, CoefPoly] = {}
    for slots, coefficient in elem.items():
        add_term(acc, "".join(slots), coefficient)
    return NcPoly._wrap(acc)
