import json
from fractions import Fraction
from pathlib import Path

import pytest

from qtharmonic import CapacityError, GraphInputError
from qtharmonic.enumeration import GraphClass, canonical_form, enumerate_class
from qtharmonic.families import K4_MINUS, U531, U641, FamilyKind, FamilySpec, U, V, build
from qtharmonic.graph import Graph, cycle_graph, is_quasi_tree
from qtharmonic.invariants import QT_BOUNDS, TREE_BOUNDS, Status
from qtharmonic.reports import lemma_to_dict, report_to_dict, report_to_json, report_to_text
from qtharmonic.verify import (
    G_LOWER,
    check_lemma_f,
    check_lemma_g,
    lemma_f,
    lemma_g,
    recognize_named,
    sweep,
    verify_conjecture1,
    verify_theorems,
)

GOLDEN = Path(__file__).parent / "golden"


def names(entries):
    return sorted(e.name for e in entries)


class TestVerifyTheorems:
    def test_small_orders_clean(self):
        report = verify_theorems(3, 4)
        assert report.violations == [] and report.equalities == []
        assert report.contract_satisfied

    def test_orders_5_6(self):
        report = verify_theorems(5, 6)
        assert names(report.violations) == ["U531", "U641"]
        assert names(report.equalities) == ["V(1,1)"]
        assert report.contract_satisfied

    def test_orders_7_8(self):
        report = verify_theorems(7, 8)
        assert report.violations == []
        assert names(report.equalities) == ["U(7)", "U(8)"]
        assert report.contract_satisfied

    def test_flagged_entries_recheck(self):
        report = verify_theorems(3, 7)
        for e in report.violations + report.equalities:
            assert e.recheck()

    def test_min_slack_positive(self):
        report = verify_theorems(3, 7)
        for order in report.orders:
            for b in QT_BOUNDS:
                assert order.min_slack[b] > 0

    def test_slack_matches_hand_value_at_order_4(self):
        # paw: H = 9/5 against 5/3
        order = verify_theorems(4, 4).orders[0]
        assert order.min_slack[QT_BOUNDS[0]] == Fraction(9, 5) - Fraction(5, 3)

    def test_caps(self):
        with pytest.raises(CapacityError):
            verify_theorems(2, 5)
        with pytest.raises(CapacityError):
            verify_theorems(3, 10)

    def test_golden(self):
        assert report_to_json(verify_theorems(3, 7)) == (GOLDEN / "theorems_3_7.json").read_text()

    def test_reproducible_bytes(self):
        a = report_to_json(verify_theorems(3, 6))
        b = report_to_json(verify_theorems(3, 6))
        assert a == b
        assert report_to_text(verify_theorems(3, 6)) == report_to_text(verify_theorems(3, 6))

    def test_parallel_matches_serial(self):
        serial = report_to_json(sweep(3, 7, QT_BOUNDS, jobs=1))
        parallel = report_to_json(sweep(3, 7, QT_BOUNDS, jobs=2))
        assert serial == parallel

    def test_contract_detects_mismatch(self):
        # A sweep that skips order 5's exception must still be judged per order.
        report = verify_theorems(5, 5)
        report.orders[0].violations.clear()
        from qtharmonic.verify import _check_contract

        _check_contract(report)
        assert report.contract_satisfied is False
        assert report.contract_mismatches

    def test_unicyclic_statement(self):
        # The unicyclic results the induction leans on: same exceptions and equality family.
        report = sweep(3, 9, QT_BOUNDS, GraphClass.UNICYCLIC)
        assert names(report.violations) == ["U531", "U641"]
        assert names(report.equalities) == ["U(7)", "U(8)", "U(9)"]


class TestConnectedSweep:
    def test_order_4(self):
        report = verify_conjecture1(4, 4)
        assert report.orders[0].graph_count == 6
        assert report.violations == []
        assert report.contract_satisfied is None

    def test_golden_4_6(self):
        assert report_to_json(verify_conjecture1(4, 6)) == (GOLDEN / "conj1_4_6.json").read_text()

    def test_exception_graphs_satisfy_weaker_bound(self):
        report = verify_conjecture1(5, 6)
        flagged = {canonical_form(e.graph) for e in report.violations}
        for spec in (U531, U641):
            assert canonical_form(build(spec)) not in flagged

    def test_caps(self):
        with pytest.raises(CapacityError):
            verify_conjecture1(3, 5)
        with pytest.raises(CapacityError):
            verify_conjecture1(4, 9)


class TestTreeSweep:
    def test_paths_are_the_equality_cases(self):
        report = sweep(4, 9, TREE_BOUNDS, GraphClass.TREE)
        assert report.violations == []
        assert names(report.equalities) == sorted(f"P({n})" for n in range(4, 10))


class TestLemmaF:
    def test_values(self):
        assert lemma_f(2, 2) == Fraction(1, 4)
        assert lemma_f(2, 3) == lemma_f(3, 2)

    def test_grid(self):
        result = check_lemma_f(100, 100)
        assert result.passed and result.failure is None
        assert result.minimum > 0
        assert result.minimum == lemma_f(*result.argmin)

    def test_rational_sample(self):
        assert check_lemma_f(6, 6, max_denominator=4).passed

    def test_bad_input(self):
        with pytest.raises(GraphInputError):
            check_lemma_f(1, 5)


class TestLemmaG:
    def test_values(self):
        assert lemma_g(2) == Fraction(11, 28)
        assert lemma_g(3) == Fraction(1, 8) + Fraction(2, 5) == Fraction(21, 40)
        assert Fraction(11, 28) <= lemma_g(3) <= Fraction(3, 5)
        x = Fraction(10)
        assert x / (x + 2) >= lemma_g(10) >= G_LOWER

    def test_grid(self):
        result = check_lemma_g(1000)
        assert result.passed
        assert result.minimum == Fraction(11, 28) and result.argmin == (2,)

    def test_rational_sample(self):
        result = check_lemma_g(50, max_denominator=8)
        assert result.passed and result.minimum == Fraction(11, 28)

    def test_serialisation(self):
        d = lemma_to_dict(check_lemma_g(10))
        assert d["minimum"] == "11/28" and d["argmin"] == ["2/1"]

    def test_bad_input(self):
        with pytest.raises(GraphInputError):
            check_lemma_g(1)


class TestRecognizeNamed:
    def test_relabelled_v11(self):
        g = build(V(1, 1))
        assert recognize_named(g.relabel([5, 3, 1, 0, 2, 4])) == V(1, 1)

    def test_cycle(self):
        assert recognize_named(cycle_graph(7)) == FamilySpec(FamilyKind.CYCLE, (7,))

    def test_exceptions_and_u(self):
        assert recognize_named(build(U641)) == U641
        assert recognize_named(build(U531)) == U531
        assert recognize_named(build(U(9))) == U(9)
        assert recognize_named(build(K4_MINUS)) == V(0, 0)

    def test_unnamed(self):
        # K_{2,3} plus a pendant path: quasi-tree matching no family
        g = Graph(8, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (4, 5), (5, 6), (6, 7)])
        assert is_quasi_tree(g)
        assert recognize_named(g) is None

    def test_most_order_8_quasi_trees_unnamed(self):
        named = [g for g in enumerate_class(8, "quasi-tree") if recognize_named(g)]
        # U(8), V(0,4), V(1,3), V(2,2), C(8)
        assert len(named) == 5


def test_report_dict_schema():
    d = report_to_dict(verify_theorems(5, 6), include_timing=True)
    assert set(d) == {
        "schema", "mode", "graph_class", "order_range", "bounds", "orders",
        "contract_satisfied", "contract_mismatches", "wall_time_seconds",
    }
    assert json.loads(json.dumps(d)) == d
    entry = d["orders"][0]["violations"][0]
    assert entry["H"] == "32/15" and entry["status"]["qt_additive"] == Status.VIOLATED.value
