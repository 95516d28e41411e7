"""End to end checks of the relations over small grids.

The exhaustive grids run with ``pytest -m slow``.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from tqmzv.algebra import Index, NcPoly
from tqmzv.exceptions import DomainError, InvalidIndexError, NotInSubspaceError
from tqmzv.relations import (
    cyclic_sum_sides,
    hoffman_display_element,
    hoffman_kernel_element,
    verify_cyclic_sum,
    verify_cyclic_sum_symbolic,
    verify_hoffman,
    verify_hoffman_display,
    verify_kawashima,
    verify_kawashima_t0,
    verify_kernel,
    verify_lemma,
    verify_lemma_suite,
)
from tqmzv.relations import definition
from tqmzv.relations._compare import aggregate, compare_coherence, compare_series
from tqmzv.relations.lemmas import FAMILIES
from tqmzv.relations.products import LAWS, verify_product_law
from tqmzv.relations.suites import SuiteOptions, build_tasks, run_task
from tqmzv.series import QSeries, TPoly

ORDER = 10

y = NcPoly.word("y")


class TestCompare:
    def test_first_difference_is_reported(self):
        lhs = QSeries.from_rationals([0, 1, 2], 2)
        rhs = QSeries.from_rationals([0, 1, 5], 2)
        report = compare_series("demo", {"N": 2}, lhs, rhs)
        assert report.status == "fail"
        assert report.first_diff.q_power == 2
        assert report.first_diff.lhs == [(0, "2/1")]
        assert report.first_diff.rhs == [(0, "5/1")]

    def test_aggregate_stops_at_the_first_failure(self):
        checks = [
            ({"i": 0}, y, y),
            ({"i": 1}, y, NcPoly.word("x")),
            ({"i": 2}, y, y),
        ]
        report = aggregate("demo", {}, iter(checks))
        assert not report.passed
        assert report.params["witness"] == {"i": 1}
        assert report.params["checked"] == 2
        assert report.params["difference"] == "-x + y"

    def test_coherence_names_the_failing_value(self):
        generic = QSeries(1, [0, TPoly({1: 1})])
        report = compare_coherence("demo", {}, generic, lambda value: QSeries(1, [0, 1]))
        assert not report.passed
        assert report.params["t"] == "0/1"

    def test_coherence_evaluates_at_every_value(self):
        generic = QSeries(1, [0, TPoly({1: 1})])
        seen = []

        def evaluate_at(value):
            seen.append(value)
            return QSeries(1, [0, value])

        report = compare_coherence("demo", {}, generic, evaluate_at)
        assert report.passed
        assert seen == [0, 1, 2, Fraction(-1, 2)]


class TestCyclicSum:
    @pytest.mark.parametrize("parts", [(2,), (3,), (2, 1), (1, 2), (3, 1), (2, 1, 1)])
    def test_series(self, parts):
        assert verify_cyclic_sum(Index(parts), ORDER).passed

    @pytest.mark.parametrize("parts", [(2,), (2, 1), (1, 3)])
    def test_kernel_element(self, parts):
        report = verify_cyclic_sum_symbolic(Index(parts), ORDER)
        assert report.passed
        assert report.relation == "csf-kernel"

    def test_depth_one_sides(self):
        lhs, rhs = cyclic_sum_sides(Index.of(2), ORDER)
        assert lhs == rhs
        assert not lhs.is_zero()

    @pytest.mark.parametrize("parts", [(1,), (1, 1), (1, 1, 1)])
    def test_all_ones_is_excluded(self, parts):
        with pytest.raises(InvalidIndexError):
            cyclic_sum_sides(Index(parts), ORDER)


class TestHoffman:
    @pytest.mark.parametrize("parts", [(2,), (3,), (2, 1), (2, 2), (3, 1), (2, 1, 1)])
    def test_kernel(self, parts):
        assert verify_hoffman(Index(parts), ORDER).passed

    @pytest.mark.parametrize("parts", [(2,), (3,), (2, 1), (2, 2)])
    def test_display(self, parts):
        report = verify_hoffman_display(Index(parts), ORDER)
        assert report.passed
        assert report.params["matches_kernel"] is True
        assert hoffman_display_element(Index(parts)) == hoffman_kernel_element(Index(parts))

    def test_needs_admissible_index(self):
        with pytest.raises(InvalidIndexError):
            verify_hoffman(Index.of(1, 2), ORDER)


class TestKernel:
    @pytest.mark.parametrize("word,n", [("xy", 1), ("xyy", 1), ("yxy", 1), ("xy", 2), ("xxy", 2)])
    def test_rho_is_annihilated(self, word, n):
        assert verify_kernel(word, n, ORDER).passed

    @pytest.mark.parametrize("word", ["", "y", "yy", "yx"])
    def test_outside_the_domain(self, word):
        with pytest.raises(NotInSubspaceError):
            verify_kernel(word, 1, ORDER)


class TestKawashima:
    @pytest.mark.parametrize("m", [1, 2])
    def test_letters(self, m):
        assert verify_kawashima(m, y, y, 8).passed

    def test_mixed_words(self):
        assert verify_kawashima(2, NcPoly.word("xy"), y, 8).passed

    def test_t0(self):
        assert verify_kawashima_t0(2, y, y, 8).passed

    def test_domain(self):
        with pytest.raises(DomainError):
            verify_kawashima(0, y, y, 8)
        with pytest.raises(NotInSubspaceError):
            verify_kawashima(1, NcPoly.word("x"), y, 8)


class TestDefinition:
    @pytest.mark.parametrize("parts", [(2,), (2, 1), (3, 1, 1)])
    def test_consistency(self, parts):
        index = Index(parts)
        reports = [
            definition.verify_route_agreement(index, ORDER),
            *definition.verify_specializations(index, ORDER),
            definition.verify_specialization_coherence(index, ORDER),
            *definition.verify_oracle(index, 8),
            definition.verify_truncation(index, ORDER),
        ]
        assert [report.status for report in reports] == ["pass"] * 7

    def test_truncation_margin(self):
        report = definition.verify_truncation(Index.of(3, 1), ORDER)
        assert report.passed
        assert report.params["higher"] == ORDER + 5

    def test_coherence_catches_a_wrong_s_map(self, monkeypatch):
        monkeypatch.setattr("tqmzv.series.evaluation.s_map", lambda poly, s=None: poly)
        report = definition.verify_specialization_coherence(Index.of(2, 1), ORDER)
        assert not report.passed
        assert report.params["t"] == "1/1"
        assert report.first_diff.q_power == 1

    @pytest.mark.parametrize("u,v", [("xy", "xy"), ("xy", "xyy"), ("xxy", "xy")])
    def test_harmonic_product(self, u, v):
        assert definition.verify_harmonic_product(u, v, ORDER).passed

    def test_harmonic_product_needs_h0(self):
        with pytest.raises(NotInSubspaceError):
            definition.verify_harmonic_product("y", "xy", ORDER)


class TestLemmas:
    @pytest.mark.parametrize("name", list(FAMILIES))
    def test_family(self, name):
        report = verify_lemma(name, 3)
        assert report.passed, report.params
        assert report.params["checked"] > 0

    def test_unknown_family(self):
        with pytest.raises(DomainError):
            verify_lemma("no-such-family", 3)

    def test_weight_bound(self):
        with pytest.raises(DomainError):
            verify_lemma("rho-at-zero", 1)

    @pytest.mark.slow
    def test_suite_at_weight_four(self):
        reports = verify_lemma_suite(4)
        assert len(reports) == len(FAMILIES)
        assert all(report.passed for report in reports)


class TestProductLaws:
    @pytest.mark.parametrize("name", list(LAWS))
    def test_law(self, name):
        report = verify_product_law(name, seed=0, count=8, max_weight=3)
        assert report.passed, report.params
        assert report.params["checked"] == 8

    def test_seed_is_reproducible(self):
        first = verify_product_law("star-associative", seed=7, count=5, max_weight=3)
        second = verify_product_law("star-associative", seed=7, count=5, max_weight=3)
        assert first == second


@pytest.mark.slow
class TestWiderGrids:
    @pytest.mark.parametrize("parts", [(4, 1, 1), (2, 3, 1), (1, 2, 2), (2, 1, 2, 1)])
    def test_cyclic_sum(self, parts):
        assert verify_cyclic_sum(Index(parts), 20).passed

    @pytest.mark.parametrize("parts", [(4, 2), (2, 1, 2, 1), (3, 1, 1, 1)])
    def test_hoffman(self, parts):
        assert verify_hoffman(Index(parts), 20).passed
        assert verify_hoffman_display(Index(parts), 20).passed

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_kawashima(self, m):
        assert verify_kawashima(m, NcPoly.word("xyy"), NcPoly.word("yxy"), 12).passed


def run_grid(suite: str, **options) -> list:
    tasks = build_tasks(suite, SuiteOptions(**options))
    reports = [report for task in tasks for report in run_task(task)]
    failed = [report for report in reports if not report.passed]
    assert reports
    assert failed == []
    return reports


@pytest.mark.slow
class TestFullGrids:
    def test_definition_weight_six_every_depth(self):
        reports = run_grid("definition", max_weight=6, order=20)
        indices = {report.params.get("index") for report in reports}
        assert "2,1,1,1,1" in indices
        assert any(report.relation == "harmonic-product" for report in reports)

    def test_cyclic_sum(self):
        reports = run_grid("csf", max_weight=6, max_depth=4, order=25)
        assert len(reports) == 104

    def test_hoffman(self):
        reports = run_grid("hoffman", max_weight=6, order=25)
        assert {report.relation for report in reports} == {"hoffman", "hoffman-display"}

    def test_kawashima(self):
        reports = run_grid("kawashima", max_weight=3, order=20)
        assert len(reports) == 168

    def test_kernel(self):
        run_grid("kernel", max_weight=5, order=15)

    def test_lemmas_at_weight_five(self):
        reports = run_grid("lemmas", max_weight=5)
        assert len(reports) == len(FAMILIES)

    def test_inverse_coherence_at_weight_six(self):
        assert verify_lemma("s-inverse-coherence", 6).passed

    def test_product_laws(self):
        reports = run_grid("products", max_weight=4)
        assert len(reports) == len(LAWS)
