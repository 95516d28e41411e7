from __future__ import annotations

import pytest
from pydantic import ValidationError

from tqmzv.algebra import HBAR, ONE, T, NcPoly, TensorElem
from tqmzv.algebra.tensor import diamond_left, diamond_right, m_map
from tqmzv.exceptions import DomainError, NotInSubspaceError

x = NcPoly.word("x")
y = NcPoly.word("y")


class TestArithmetic:
    def test_concatenation_is_noncommutative(self):
        assert x * y == NcPoly.word("xy")
        assert x * y != y * x

    def test_power(self):
        assert (x + y) ** 2 == NcPoly({"xx": 1, "xy": 1, "yx": 1, "yy": 1})
        assert x**0 == NcPoly.one()

    def test_cancellation(self):
        assert (x * 2 - x - x).is_zero()
        assert x - x == NcPoly.zero()
        assert len(x + y - y) == 1

    def test_scalars(self):
        poly = (x + 1).scale(T)
        assert poly.coefficient("x") == T
        assert poly.coefficient("") == T
        assert poly.coefficient("y").is_zero()

    def test_coerce(self):
        assert NcPoly.coerce("z[2]") == NcPoly.word("xy")
        assert NcPoly.coerce(3) == NcPoly.scalar(3)

    def test_substitution(self):
        poly = NcPoly({"xy": HBAR * T + T, "y": ONE})
        assert poly.subs_t(0) == y
        assert poly.subs_hbar(0) == NcPoly({"xy": T, "y": 1})

    def test_require(self):
        assert (x * y).require("H1") == x * y
        with pytest.raises(NotInSubspaceError):
            (x * y + y * x).require("H1")


class TestRender:
    def test_length_lex_order(self):
        poly = NcPoly({"xyy": ONE, "xxy": T, "xy": HBAR * T})
        assert poly.render() == "h^1*t^1*z[2] + t^1*z[3] + z[2,1]"
        assert poly.render(letters=True) == "h^1*t^1*xy + t^1*xxy + xyy"

    @pytest.mark.parametrize(
        "poly,text",
        [
            (NcPoly.zero(), "0"),
            (NcPoly.one(), "1"),
            (NcPoly.scalar(2), "2"),
            (NcPoly.word("xy", -2), "-2*z[2]"),
            (NcPoly.word("yx") - NcPoly.word("y"), "-z[1] + yx"),
            (NcPoly.word("y", ONE - T), "z[1] - t^1*z[1]"),
        ],
    )
    def test_render(self, poly, text):
        assert poly.render() == text

    def test_json(self):
        poly = NcPoly({"xy": HBAR * 2, "": 1})
        assert poly.to_json() == [
            {"word": "", "coeff": [[0, 0, "1/1"]]},
            {"word": "xy", "coeff": [[1, 0, "2/1"]]},
        ]
        assert NcPoly.from_json(poly.to_json()) == poly

    def test_json_rejects_other_letters(self):
        with pytest.raises(ValidationError):
            NcPoly.from_json([{"word": "xa", "coeff": [[0, 0, "1/1"]]}])


class TestTensor:
    def test_from_factors(self):
        elem = TensorElem.from_factors([x + y, y])
        assert elem == TensorElem(2, {("x", "y"): 1, ("y", "y"): 1})

    def test_slot_count_is_checked(self):
        with pytest.raises(DomainError):
            TensorElem(2, {("x",): 1})
        with pytest.raises(DomainError):
            TensorElem(1)
        with pytest.raises(DomainError):
            TensorElem(2) + TensorElem(3)

    def test_diamond_actions(self):
        elem = TensorElem(3, {("x", "y", "y"): 1})
        assert diamond_left(x, elem) == TensorElem(3, {("x", "y", "xy"): 1})
        assert diamond_right(elem, y) == TensorElem(3, {("xy", "y", "y"): 1})

    def test_m_multiplies_in_order(self):
        elem = TensorElem(3, {("x", "y", "y"): T, ("xy", "", "y"): 1})
        assert m_map(elem) == NcPoly({"xyy": T + 1})

    def test_json(self):
        elem = TensorElem(2, {("x", "y"): HBAR})
        assert TensorElem.from_json(2, elem.to_json()) == elem
