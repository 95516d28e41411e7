"""Truncated power series in q with coefficients in Q[t]"""

from __future__ import annotations

from typing import Iterable, Sequence

from pydantic import TypeAdapter

from tqmzv.algebra.coefficients import Rational, as_rational
from tqmzv.models.records import SeriesRecord
from tqmzv.series.tpoly import TPoly

_RECORD = TypeAdapter(SeriesRecord)


class QSeries:
    """An element of Q[t][[q]] modulo q^(N+1).

    Arithmetic between series of different orders truncates to the smaller
    order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[object] = ()):
        if order < 0:
            raise ValueError(f"series order must be >= 0, got {order}")
        padded = [TPoly.coerce(c) for c in list(coeffs)[: order + 1]]
        padded += [TPoly()] * (order + 1 - len(padded))
        self.order = order
        self.coeffs: tuple[TPoly, ...] = tuple(padded)

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls(order, [1])

    @classmethod
    def monomial(cls, power: int, coefficient: object, order: int) -> "QSeries":
        coeffs: list[object] = [0] * (order + 1)
        if power <= order:
            coeffs[power] = coefficient
        return cls(order, coeffs)

    @classmethod
    def from_rationals(cls, values: Iterable[Rational], order: int) -> "QSeries":
        return cls(order, [TPoly.constant(v) for v in values])

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], Rational], order: int) -> "QSeries":
        """Build from ``{(deg_q, deg_t): value}``, dropping powers above order."""
        rows: list[dict[int, Rational]] = [{} for _ in range(order + 1)]
        for (deg_q, deg_t), value in terms.items():
            if deg_q <= order:
                rows[deg_q][deg_t] = rows[deg_q].get(deg_t, 0) + value
        return cls(order, [TPoly(row) for row in rows])

    def __add__(self, other: object) -> "QSeries":
        if not isinstance(other, QSeries):
            other = QSeries(self.order, [other])
        order = min(self.order, other.order)
        return QSeries(
            order, [self.coeffs[n] + other.coeffs[n] for n in range(order + 1)]
        )

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other: object) -> "QSeries":
        return self + (-other)

    def __mul__(self, other: object) -> "QSeries":
        if not isinstance(other, QSeries):
            factor = TPoly.coerce(other)
            return QSeries(self.order, [c * factor for c in self.coeffs])
        order = min(self.order, other.order)
        coeffs = [TPoly() for _ in range(order + 1)]
        for i in range(order + 1):
            left = self.coeffs[i]
            if not left:
                continue
            for j in range(order + 1 - i):
                right = other.coeffs[j]
                if right:
                    coeffs[i + j] = coeffs[i + j] + left * right
        return QSeries(order, coeffs)

    __rmul__ = __mul__

    def truncate(self, order: int) -> "QSeries":
        return QSeries(min(order, self.order), self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    __hash__ = None

    def first_difference(self, other: "QSeries") -> tuple[int, TPoly, TPoly] | None:
        """The lowest q-power where the two series differ."""
        order = min(self.order, other.order)
        for power in range(order + 1):
            if self.coeffs[power] != other.coeffs[power]:
                return power, self.coeffs[power], other.coeffs[power]
        return None

    def subs_t(self, value: object) -> "QSeries":
        value = as_rational(value)
        return QSeries(self.order, [TPoly.constant(c.subs(value)) for c in self.coeffs])

    def rationals(self) -> list[Rational]:
        """coefficients of a t-free series"""
        return [c.constant_term for c in self.coeffs]

    def eval_float(self, q: float, t: float = 0.0) -> float:
        total = 0.0
        for coefficient in reversed(self.coeffs):
            total = total * q + coefficient.eval_float(t)
        return total

    def __str__(self) -> str:
        pieces = []
        for power, coefficient in enumerate(self.coeffs):
            if not coefficient:
                continue
            negative = coefficient.is_monomial() and next(
                iter(coefficient.terms.values())
            ) < 0
            shown = -coefficient if negative else coefficient
            text = str(shown)
            if not shown.is_monomial():
                text = f"({text})"
            if power == 0:
                body = text
            elif text == "1":
                body = f"q^{power}"
            else:
                body = f"{text}*q^{power}"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(pieces) if pieces else "0"

    def __repr__(self) -> str:
        return f"QSeries({self.order}, {str(self)!r})"

    def to_json(self) -> dict:
        return {"N": self.order, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: object) -> "QSeries":
        record = _RECORD.validate_python(data)
        return cls(record.N, [TPoly.from_json(row) for row in record.coeffs])
