"""Exact coefficients: rationals and the polynomial ring Q[h, t].

``h`` stands for the formal variable hbar throughout the text formats.
Rationals are kept as ``int`` whenever the denominator is 1 and as
:class:`fractions.Fraction` otherwise, which keeps the integer-heavy
coefficient arithmetic of the word algebra fast.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Union

from tqmzv.exceptions import DomainError

Rational = Union[int, Fraction]
Exponent = tuple[int, int]

__all__ = [
    "Rational",
    "CoefPoly",
    "as_rational",
    "format_rational",
    "parse_rational",
    "ZERO",
    "ONE",
    "HBAR",
    "T",
]


def as_rational(value: object) -> Rational:
    """Canonical exact rational for ``value`` (int, Fraction or text)."""
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


def parse_rational(text: str) -> Rational:
    try:
        return as_rational(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError) as error:
        raise DomainError(f"not a rational number: {text!r}", text) from error


def format_rational(value: Rational) -> str:
    """``num/den`` form used by every JSON payload."""
    return f"{value.numerator}/{value.denominator}"


def _format_scalar(value: Rational) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _power(symbol: str, exponent: int) -> str:
    return f"{symbol}^{exponent}"


class CoefPoly:
    """Sparse polynomial in h and t with exact rational coefficients.

    Keys are ``(deg_h, deg_t)`` pairs; zero coefficients are never stored,
    so equality is plain dictionary equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, object] | None = None):
        clean: dict[Exponent, Rational] = {}
        for (deg_h, deg_t), value in (terms or {}).items():
            if deg_h < 0 or deg_t < 0:
                raise DomainError("negative exponent in coefficient", (deg_h, deg_t))
            coefficient = as_rational(value)
            if coefficient:
                key = (int(deg_h), int(deg_t))
                coefficient = clean.get(key, 0) + coefficient
                if coefficient:
                    clean[key] = coefficient
                else:
                    clean.pop(key, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict[Exponent, Rational]) -> "CoefPoly":
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def constant(cls, value: object) -> "CoefPoly":
        value = as_rational(value)
        return cls._wrap({(0, 0): value} if value else {})

    @classmethod
    def monomial(cls, value: object, deg_h: int = 0, deg_t: int = 0) -> "CoefPoly":
        return cls({(deg_h, deg_t): value})

    @classmethod
    def coerce(cls, value: object) -> "CoefPoly":
        if isinstance(value, CoefPoly):
            return value
        return cls.constant(value)

    @property
    def terms(self) -> Mapping[Exponent, Rational]:
        return self._terms

    def items(self) -> Iterable[tuple[Exponent, Rational]]:
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    @property
    def constant_term(self) -> Rational:
        return self._terms.get((0, 0), 0)

    def hbar_degree(self) -> int:
        """Highest power of h, -1 for the zero polynomial."""
        return max((deg_h for deg_h, _ in self._terms), default=-1)

    def t_degree(self) -> int:
        return max((deg_t for _, deg_t in self._terms), default=-1)

    def min_hbar_degree(self) -> int:
        return min((deg_h for deg_h, _ in self._terms), default=-1)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: object) -> "CoefPoly":
        if not isinstance(other, CoefPoly):
            try:
                other = CoefPoly.constant(other)
            except TypeError:
                return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        result = dict(self._terms)
        for key, value in other._terms.items():
            total = result.get(key, 0) + value
            if total:
                result[key] = total
            else:
                del result[key]
        return CoefPoly._wrap(result)

    __radd__ = __add__

    def __neg__(self) -> "CoefPoly":
        return CoefPoly._wrap({key: -value for key, value in self._terms.items()})

    def __sub__(self, other: object) -> "CoefPoly":
        if not isinstance(other, CoefPoly):
            try:
                other = CoefPoly.constant(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "CoefPoly":
        return (-self) + other

    def __mul__(self, other: object) -> "CoefPoly":
        if not isinstance(other, CoefPoly):
            try:
                scalar = as_rational(other)
            except TypeError:
                return NotImplemented
            if not scalar:
                return ZERO
            return CoefPoly._wrap(
                {key: value * scalar for key, value in self._terms.items()}
            )
        if not self._terms or not other._terms:
            return ZERO
        result: dict[Exponent, Rational] = {}
        for (a1, b1), v1 in self._terms.items():
            for (a2, b2), v2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                total = result.get(key, 0) + v1 * v2
                if total:
                    result[key] = total
                else:
                    result.pop(key, None)
        return CoefPoly._wrap({k: as_rational(v) for k, v in result.items()})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "CoefPoly":
        if exponent < 0:
            raise DomainError("negative powers are not polynomials", exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CoefPoly):
            return self._terms == other._terms
        try:
            return self._terms == CoefPoly.constant(other)._terms
        except (TypeError, DomainError):
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def eval(self, hbar: object, t: object) -> Rational:
        hbar, t = as_rational(hbar), as_rational(t)
        total: Rational = 0
        for (deg_h, deg_t), value in self._terms.items():
            total += value * hbar**deg_h * t**deg_t
        return as_rational(total)

    def eval_float(self, hbar: float, t: float) -> float:
        return float(
            sum(
                float(value) * hbar**deg_h * t**deg_t
                for (deg_h, deg_t), value in self._terms.items()
            )
        )

    def subs_t(self, value: object) -> "CoefPoly":
        """Specialize t to an exact rational."""
        value = as_rational(value)
        result: dict[Exponent, Rational] = {}
        for (deg_h, deg_t), coefficient in self._terms.items():
            key = (deg_h, 0)
            result[key] = result.get(key, 0) + coefficient * value**deg_t
        return CoefPoly(result)

    def subs_hbar(self, value: object) -> "CoefPoly":
        value = as_rational(value)
        result: dict[Exponent, Rational] = {}
        for (deg_h, deg_t), coefficient in self._terms.items():
            key = (0, deg_t)
            result[key] = result.get(key, 0) + coefficient * value**deg_h
        return CoefPoly(result)

    def subs_hbar_q(self) -> dict[tuple[int, int], Rational]:
        """Expand h -> 1 - q; keys of the result are ``(deg_q, deg_t)``."""
        result: dict[tuple[int, int], Rational] = {}
        for (deg_h, deg_t), coefficient in self._terms.items():
            for j in range(deg_h + 1):
                key = (j, deg_t)
                total = result.get(key, 0) + coefficient * comb(deg_h, j) * (-1) ** j
                if total:
                    result[key] = as_rational(total)
                else:
                    result.pop(key, None)
        return result

    def sorted_terms(self) -> list[tuple[Exponent, Rational]]:
        """Graded-lex order on ``(deg_h, deg_t)``; for rendering only."""
        return sorted(
            self._terms.items(), key=lambda item: (sum(item[0]), item[0])
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for (deg_h, deg_t), value in self.sorted_terms():
            factors = []
            if abs(value) != 1 or (deg_h == 0 and deg_t == 0):
                factors.append(_format_scalar(abs(value)))
            if deg_h:
                factors.append(_power("h", deg_h))
            if deg_t:
                factors.append(_power("t", deg_t))
            body = "*".join(factors)
            if not pieces:
                pieces.append(f"-{body}" if value < 0 else body)
            else:
                pieces.append(f"- {body}" if value < 0 else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"CoefPoly({str(self)!r})"

    def to_json(self) -> list[list]:
        return [
            [deg_h, deg_t, format_rational(value)]
            for (deg_h, deg_t), value in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: Iterable[Iterable]) -> "CoefPoly":
        terms: dict[Exponent, Rational] = {}
        for deg_h, deg_t, value in data:
            key = (int(deg_h), int(deg_t))
            terms[key] = terms.get(key, 0) + parse_rational(str(value))
        return cls(terms)

    _MONOMIAL = re.compile(r"[+-]?[^+-]+")

    @classmethod
    def parse(cls, text: str) -> "CoefPoly":
        """Inverse of ``str``: accepts ``3/2*h^1*t^2 - t^1 + 5``."""
        source = text.replace(" ", "")
        if source in ("", "0"):
            return ZERO
        terms: dict[Exponent, Rational] = {}
        for chunk in cls._MONOMIAL.findall(source):
            sign = -1 if chunk.startswith("-") else 1
            scalar: Rational = sign
            deg_h = deg_t = 0
            for factor in chunk.lstrip("+-").split("*"):
                symbol, _, exponent = factor.partition("^")
                power = int(exponent) if exponent else 1
                if symbol == "h":
                    deg_h += power
                elif symbol == "t":
                    deg_t += power
                elif not exponent:
                    scalar = scalar * parse_rational(symbol)
                else:
                    raise DomainError(f"cannot parse coefficient {text!r}", text)
            key = (deg_h, deg_t)
            terms[key] = terms.get(key, 0) + scalar
        return cls(terms)


ZERO = CoefPoly._wrap({})
ONE = CoefPoly._wrap({(0, 0): 1})
HBAR = CoefPoly._wrap({(1, 0): 1})
T = CoefPoly._wrap({(0, 1): 1})
