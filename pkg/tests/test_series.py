from __future__ import annotations

from fractions import Fraction

import pytest
from pydantic import ValidationError

from tqmzv.algebra import HBAR, ONE, T, Index, NcPoly
from tqmzv.exceptions import InvalidIndexError, NotInSubspaceError
from tqmzv.series import QSeries, TPoly
from tqmzv.series.evaluation import z_eval
from tqmzv.series.zeta import (
    filler_indices,
    inv_qbracket_pow,
    zeta_q,
    zeta_q_naive,
    zeta_q_star,
    zeta_q_t_direct,
)
from tqmzv.storage import MemorySeriesCache


class TestTPoly:
    def test_str(self):
        assert str(TPoly({0: 1, 2: Fraction(3, 2)})) == "1 + 3/2*t^2"
        assert str(TPoly({1: -1})) == "-t^1"
        assert str(TPoly()) == "0"

    def test_arithmetic(self):
        one_plus_t = TPoly({0: 1, 1: 1})
        assert one_plus_t * one_plus_t == TPoly({0: 1, 1: 2, 2: 1})
        assert (one_plus_t - 1) == TPoly({1: 1})
        assert one_plus_t.subs(Fraction(1, 2)) == Fraction(3, 2)
        assert TPoly({2: 3}).is_monomial()


class TestQSeries:
    def test_str(self):
        series = QSeries.from_rationals([0, 1, 1, -1, 2], 4)
        assert str(series) == "q^1 + q^2 - q^3 + 2*q^4"
        assert str(QSeries.zero(3)) == "0"
        assert str(QSeries(2, [1, TPoly({0: 1, 1: 1})])) == "1 + (1 + t^1)*q^1"

    def test_mixed_orders_truncate(self):
        total = QSeries.one(5) + QSeries.one(2)
        assert total.order == 2

    def test_geometric_series(self):
        one_minus_q = QSeries.from_rationals([1, -1], 6)
        geometric = QSeries.from_rationals([1] * 7, 6)
        assert one_minus_q * geometric == QSeries.one(6)

    def test_monomial_above_order_is_zero(self):
        assert QSeries.monomial(5, 3, 4).is_zero()
        assert QSeries.monomial(2, 3, 4).rationals() == [0, 0, 3, 0, 0]

    def test_first_difference(self):
        left = QSeries.from_rationals([0, 1, 2], 2)
        right = QSeries.from_rationals([0, 1, 3], 2)
        power, lhs, rhs = left.first_difference(right)
        assert (power, lhs, rhs) == (2, TPoly.constant(2), TPoly.constant(3))
        assert left.first_difference(left) is None

    def test_subs_t_and_float(self):
        series = QSeries(2, [0, TPoly({1: 2}), TPoly({0: 1})])
        assert series.subs_t(Fraction(1, 2)).rationals() == [0, 1, 1]
        assert series.eval_float(0.5, 1.0) == pytest.approx(1.25)

    def test_json(self):
        series = QSeries(1, [TPoly({0: Fraction(1, 3)}), TPoly({2: -1})])
        assert series.to_json() == {"N": 1, "coeffs": [[[0, "1/3"]], [[2, "-1/1"]]]}
        assert QSeries.from_json(series.to_json()) == series

    def test_json_needs_every_coefficient(self):
        with pytest.raises(ValidationError):
            QSeries.from_json({"N": 2, "coeffs": [[]]})

    def test_negative_order(self):
        with pytest.raises(ValueError):
            QSeries(-1)


class TestZeta:
    def test_inverse_q_bracket(self):
        assert inv_qbracket_pow(2, 1, 3).rationals() == [1, -1, 1, -1]
        assert inv_qbracket_pow(1, 3, 3) == QSeries.one(3)

    @pytest.mark.parametrize(
        "parts,order,coefficients",
        [
            ((2,), 4, [0, 1, 1, -1, 2]),
            ((3,), 3, [0, 0, 1, 0]),
            ((2, 1), 3, [0, 0, 1, 0]),
        ],
    )
    def test_small_series(self, parts, order, coefficients):
        assert zeta_q(Index(parts), order).rationals() == coefficients

    def test_star_series(self):
        assert zeta_q_star(Index.of(2), 4) == zeta_q(Index.of(2), 4)
        assert zeta_q_star(Index.of(2, 1), 3).rationals() == [0, 1, 2, -2]

    @pytest.mark.parametrize("parts", [(2,), (3,), (2, 1), (3, 1), (2, 2), (2, 1, 1)])
    @pytest.mark.parametrize("star", [False, True])
    def test_matches_brute_force(self, parts, star):
        index = Index(parts)
        evaluate = zeta_q_star if star else zeta_q
        assert evaluate(index, 9) == zeta_q_naive(index, 9, star=star)

    def test_two_one_equals_three(self):
        assert zeta_q(Index.of(2, 1), 12) == zeta_q(Index.of(3), 12)

    def test_truncation_is_a_prefix(self):
        assert zeta_q(Index.of(3, 1), 12).truncate(7) == zeta_q(Index.of(3, 1), 7)

    def test_non_admissible(self):
        with pytest.raises(InvalidIndexError):
            zeta_q(Index.of(1, 2), 5)

    def test_uses_the_given_cache(self):
        cache = MemorySeriesCache()
        first = zeta_q(Index.of(2, 1), 6, cache)
        assert len(cache) == 1
        assert cache.get("zeta", Index.of(2, 1), 6) == first


class TestInterpolation:
    def test_fillers(self):
        assert filler_indices(Index.of(2, 1)) == [
            (Index.of(2, 1), 0, 0),
            (Index.of(3), 0, 1),
            (Index.of(2), 1, 1),
        ]

    @pytest.mark.parametrize("parts", [(2,), (2, 1), (3, 1), (2, 1, 1), (2, 2)])
    def test_endpoints(self, parts):
        index = Index(parts)
        series = zeta_q_t_direct(index, 8)
        assert series.subs_t(0) == zeta_q(index, 8)
        assert series.subs_t(1) == zeta_q_star(index, 8)

    @pytest.mark.parametrize("parts", [(2,), (2, 1), (3, 1), (2, 1, 1), (2, 2)])
    def test_routes_agree(self, parts):
        index = Index(parts)
        word = NcPoly.word(index.word())
        assert z_eval(word, 8) == z_eval(word, 8, route="definition")
        assert z_eval(word, 8) == zeta_q_t_direct(index, 8)

    @pytest.mark.parametrize("value", [0, 1, 2, Fraction(-1, 2)])
    @pytest.mark.parametrize("parts", [(2, 1), (3, 1, 1)])
    def test_fixed_t_matches_substitution(self, parts, value):
        index = Index(parts)
        word = NcPoly.word(index.word())
        generic = zeta_q_t_direct(index, 8)
        assert z_eval(word, 8, s=value) == generic.subs_t(value)
        assert z_eval(word, 8, route="definition", s=value) == generic.subs_t(value)

    def test_fixed_t_substitutes_coefficients(self):
        poly = NcPoly({"xy": T})
        assert z_eval(poly, 5, s=2) == zeta_q(Index.of(2), 5) * 2

    def test_linear_combination(self):
        poly = NcPoly({"xy": T, "xxy": HBAR, "": ONE})
        series = z_eval(poly, 5)
        one_minus_q = QSeries.from_rationals([1, -1], 5)
        expected = (
            zeta_q(Index.of(2), 5) * TPoly({1: 1})
            + one_minus_q * zeta_q(Index.of(3), 5)
            + QSeries.one(5)
        )
        assert series == expected

    def test_needs_h0(self):
        with pytest.raises(NotInSubspaceError):
            z_eval(NcPoly.word("yxy"), 5)
