from __future__ import annotations

import math

import pytest

from tqmzv.algebra import Index, NcPoly
from tqmzv.exceptions import DomainError, InvalidIndexError
from tqmzv.series.evaluation import z_eval
from tqmzv.series.numeric import numeric_eval, zeta_q_float, zeta_q_t_float
from tqmzv.series.zeta import zeta_q, zeta_q_star, zeta_q_t_direct

ORDER = 60


class TestAgainstExactSeries:
    @pytest.mark.parametrize("parts", [(2,), (3,), (2, 1), (3, 1, 2)])
    def test_plain(self, parts):
        index = Index(parts)
        exact = zeta_q(index, ORDER).eval_float(0.5)
        assert zeta_q_float(index, 0.5, eps=1e-15) == pytest.approx(exact, rel=1e-10)

    @pytest.mark.parametrize("parts", [(2, 1), (2, 2, 1)])
    def test_star(self, parts):
        index = Index(parts)
        exact = zeta_q_star(index, ORDER).eval_float(0.5)
        assert zeta_q_float(index, 0.5, star=True) == pytest.approx(exact, rel=1e-10)

    def test_interpolated(self):
        index = Index.of(2, 1, 1)
        exact = zeta_q_t_direct(index, ORDER).eval_float(0.5, 0.5)
        assert zeta_q_t_float(index, 0.5, 0.5) == pytest.approx(exact, rel=1e-10)

    def test_polynomial_target(self):
        poly = NcPoly({"xyy": 1, "xxy": -1})
        exact = z_eval(poly, ORDER).eval_float(0.5, 0.25)
        assert numeric_eval(poly, 0.5, t=0.25) == pytest.approx(exact, abs=1e-12)


class TestNumericEval:
    def test_t_one_is_star(self):
        index = Index.of(3, 1)
        assert numeric_eval(index, 0.3, t=1.0) == pytest.approx(
            numeric_eval(index, 0.3, star=True), rel=1e-12
        )

    def test_q_near_one(self):
        value = numeric_eval(Index.of(2), 0.999, eps=1e-12)
        assert value == pytest.approx(math.pi**2 / 6, abs=2e-2)

    @pytest.mark.parametrize("q", [0.0, 1.0, -0.5, 1.5])
    def test_q_outside_unit_interval(self, q):
        with pytest.raises(DomainError):
            numeric_eval(Index.of(2), q)

    def test_non_admissible(self):
        with pytest.raises(InvalidIndexError):
            zeta_q_float(Index.of(1, 2), 0.5)
