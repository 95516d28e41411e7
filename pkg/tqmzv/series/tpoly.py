"""Polynomials in t over the rationals, the coefficients of the q-series"""

from __future__ import annotations

from typing import Iterable, Mapping

from tqmzv.algebra.coefficients import (
    Rational,
    as_rational,
    format_rational,
    parse_rational,
)
from tqmzv.exceptions import DomainError


class TPoly:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean: dict[int, Rational] = {}
        for degree, value in (terms or {}).items():
            degree = int(degree)
            if degree < 0:
                raise ValueError(f"negative t-degree {degree}")
            total = clean.get(degree, 0) + as_rational(value)
            if total:
                clean[degree] = as_rational(total)
            else:
                clean.pop(degree, None)
        self._terms = clean

    @classmethod
    def _wrap(cls, terms: dict[int, Rational]) -> "TPoly":
        poly = cls.__new__(cls)
        poly._terms = terms
        return poly

    @classmethod
    def constant(cls, value: object) -> "TPoly":
        value = as_rational(value)
        return cls._wrap({0: value} if value else {})

    @classmethod
    def coerce(cls, value: object) -> "TPoly":
        return value if isinstance(value, TPoly) else cls.constant(value)

    @property
    def terms(self) -> Mapping[int, Rational]:
        return self._terms

    @property
    def constant_term(self) -> Rational:
        return self._terms.get(0, 0)

    def degree(self) -> int:
        return max(self._terms, default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: object) -> "TPoly":
        other = TPoly.coerce(other)
        acc = dict(self._terms)
        for degree, value in other._terms.items():
            total = acc.get(degree, 0) + value
            if total:
                acc[degree] = as_rational(total)
            else:
                acc.pop(degree, None)
        return TPoly._wrap(acc)

    __radd__ = __add__

    def __neg__(self) -> "TPoly":
        return TPoly._wrap({d: -v for d, v in self._terms.items()})

    def __sub__(self, other: object) -> "TPoly":
        return self + (-TPoly.coerce(other))

    def __rsub__(self, other: object) -> "TPoly":
        return TPoly.coerce(other) - self

    def __mul__(self, other: object) -> "TPoly":
        other = TPoly.coerce(other)
        acc: dict[int, Rational] = {}
        for d1, v1 in self._terms.items():
            for d2, v2 in other._terms.items():
                acc[d1 + d2] = acc.get(d1 + d2, 0) + v1 * v2
        return TPoly._wrap({d: as_rational(v) for d, v in acc.items() if v})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TPoly):
            return self._terms == other._terms
        try:
            return self._terms == TPoly.constant(other)._terms
        except (TypeError, DomainError):
            return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def subs(self, value: object) -> Rational:
        value = as_rational(value)
        return as_rational(sum(v * value**d for d, v in self._terms.items()))

    def eval_float(self, value: float) -> float:
        return sum(float(v) * value**d for d, v in self._terms.items())

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for degree, value in sorted(self._terms.items()):
            magnitude = abs(value)
            if degree == 0:
                body = _scalar(magnitude)
            elif magnitude == 1:
                body = f"t^{degree}"
            else:
                body = f"{_scalar(magnitude)}*t^{degree}"
            if not pieces:
                pieces.append(f"-{body}" if value < 0 else body)
            else:
                pieces.append(f"- {body}" if value < 0 else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"TPoly({str(self)!r})"

    def to_json(self) -> list[list]:
        return [[d, format_rational(v)] for d, v in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data: Iterable[Iterable]) -> "TPoly":
        acc: dict[int, Rational] = {}
        for degree, value in data:
            acc[int(degree)] = acc.get(int(degree), 0) + parse_rational(str(value))
        return cls(acc)


def _scalar(value: Rational) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
