"""Exhaustive sweeps of the diameter bounds over enumerated graphs, plus exact
grid checks of the two auxiliary inequalities used in the induction.

A sweep evaluates every graph of each order against a set of bounds and
records the graphs that violate or meet a bound with equality.  For the
quasi-tree bounds the expected outcome is built in (:data:`EXPECTED_VIOLATIONS`,
:func:`expected_equalities`) and every report carries a contract check
against it.
"""

from __future__ import annotations

import time
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .enumeration import GraphClass, canonical_form, enumerate_class
from .errors import CapacityError, GraphInputError
from .families import U531, U641, FamilyKind, FamilySpec, K13_PLUS, U, V, build
from .formats import decode_graph6, encode_graph6
from .graph import Graph
from .invariants import (
    CONJ1_BOUNDS,
    QT_BOUNDS,
    BoundId,
    Status,
    Verdict,
    evaluate,
)

THEOREM_CAP = 9
CONJ1_CAP = 8

EXPECTED_VIOLATIONS: dict[int, tuple[FamilySpec, ...]] = {5: (U531,), 6: (U641,)}


def expected_equalities(n: int) -> tuple[FamilySpec, ...]:
    if n == 6:
        return (V(1, 1),)
    if n >= 7:
        return (U(n),)
    return ()


@dataclass(frozen=True)
class Entry:
    """One graph singled out by a sweep (a violation or an equality case)."""

    graph6: str
    name: str | None
    H: Fraction
    D: int
    status: dict[BoundId, Status]

    @property
    def graph(self) -> Graph:
        return decode_graph6(self.graph6)

    def recheck(self) -> bool:
        """Re-evaluate the stored graph and confirm the recorded statuses."""
        verdict = evaluate(self.graph, self.status)
        return verdict.status == self.status and verdict.H == self.H and verdict.D == self.D


@dataclass
class OrderReport:
    n: int
    graph_count: int = 0
    violations: list[Entry] = field(default_factory=list)
    equalities: list[Entry] = field(default_factory=list)
    min_slack: dict[BoundId, Fraction | None] = field(default_factory=dict)


@dataclass
class VerificationReport:
    mode: str
    graph_class: GraphClass
    n_min: int
    n_max: int
    bounds: tuple[BoundId, ...]
    orders: list[OrderReport] = field(default_factory=list)
    wall_time: float = 0.0
    contract_satisfied: bool | None = None
    contract_mismatches: list[str] = field(default_factory=list)

    @property
    def violations(self) -> list[Entry]:
        return [e for o in self.orders for e in o.violations]

    @property
    def equalities(self) -> list[Entry]:
        return [e for o in self.orders for e in o.equalities]


def recognize_named(g: Graph) -> FamilySpec | None:
    """Name ``g`` if it is isomorphic to one of the named family members of its order."""
    n = g.n
    if n < 1 or n > 12:
        return None
    candidates: list[FamilySpec] = []
    if n == 6:
        candidates.append(U641)
    if n == 5:
        candidates += [U531, K13_PLUS]
    if n >= 7:
        candidates.append(U(n))
    if n >= 4:
        candidates += [V(r, n - 4 - r) for r in range((n - 4) // 2 + 1)]
    candidates.append(FamilySpec(FamilyKind.COMPLETE, (n,)))
    if n >= 3:
        candidates.append(FamilySpec(FamilyKind.CYCLE, (n,)))
    candidates.append(FamilySpec(FamilyKind.PATH, (n,)))
    if n >= 2:
        candidates.append(FamilySpec(FamilyKind.STAR, (n,)))
    edge_count = g.edge_count
    form = None
    for spec in candidates:
        h = build(spec)
        if h.edge_count != edge_count or sorted(h.degrees()) != sorted(g.degrees()):
            continue
        form = form or canonical_form(g)
        if canonical_form(h) == form:
            return spec
    return None


def _evaluate_one(args: tuple[Graph, tuple[BoundId, ...]]) -> Verdict:
    g, bounds = args
    return evaluate(g, bounds)


def _map(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) < 64:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def sweep(
    n_min: int,
    n_max: int,
    bounds: Iterable[BoundId],
    graph_class: GraphClass = GraphClass.QUASI_TREE,
    *,
    mode: str = "custom",
    jobs: int = 1,
) -> VerificationReport:
    """Evaluate ``bounds`` on every graph of ``graph_class`` with order in ``n_min..n_max``."""
    bounds = tuple(bounds)
    report = VerificationReport(mode, GraphClass(graph_class), n_min, n_max, bounds)
    start = time.perf_counter()
    for n in range(n_min, n_max + 1):
        graphs = list(enumerate_class(n, graph_class))
        verdicts = _map(_evaluate_one, [(g, bounds) for g in graphs], jobs)
        order = OrderReport(n, len(graphs), min_slack={b: None for b in bounds})
        for g, v in zip(graphs, verdicts):
            for b in bounds:
                if v.status[b] is Status.STRICT:
                    slack = v.slack(b)
                    cur = order.min_slack[b]
                    order.min_slack[b] = slack if cur is None else min(cur, slack)
            if not (v.violated or v.equal):
                continue
            name = recognize_named(g)
            entry = Entry(encode_graph6(g), str(name) if name else None, v.H, v.D, dict(v.status))
            (order.violations if v.violated else order.equalities).append(entry)
        report.orders.append(order)
    report.wall_time = time.perf_counter() - start
    return report


def _check_contract(report: VerificationReport) -> None:
    mismatches = []
    for order in report.orders:
        n = order.n
        want = {
            Status.VIOLATED: {canonical_form(build(s)) for s in EXPECTED_VIOLATIONS.get(n, ())},
            Status.EQUAL: {canonical_form(build(s)) for s in expected_equalities(n)},
        }
        entries = order.violations + order.equalities
        for b in report.bounds:
            for status, expected in want.items():
                got = {canonical_form(e.graph) for e in entries if e.status[b] is status}
                if got != expected:
                    mismatches.append(
                        f"n={n} {b.value}: {status.value} set has {len(got)} graph(s), expected {len(expected)}"
                        f" (unexpected: {sorted(e.graph6 for e in entries if canonical_form(e.graph) in got - expected)})"
                    )
    report.contract_mismatches = mismatches
    report.contract_satisfied = not mismatches


def verify_theorems(n_min: int, n_max: int, *, jobs: int = 1) -> VerificationReport:
    """Sweep both quasi-tree bounds over all quasi-trees of order ``n_min..n_max``.

    The report's contract check passes iff the only violations are U531 (n=5)
    and U641 (n=6) and the only equality cases are V(1,1) (n=6) and U(n) for
    n >= 7, for each bound separately.
    """
    if not 3 <= n_min <= n_max <= THEOREM_CAP:
        raise CapacityError(f"theorem sweep needs 3 <= n_min <= n_max <= {THEOREM_CAP}")
    report = sweep(n_min, n_max, QT_BOUNDS, GraphClass.QUASI_TREE, mode="theorems", jobs=jobs)
    _check_contract(report)
    return report


def verify_conjecture1(n_min: int, n_max: int, *, jobs: int = 1) -> VerificationReport:
    """Report-only sweep of the general-graph conjecture over all connected graphs."""
    if not 4 <= n_min <= n_max <= CONJ1_CAP:
        raise CapacityError(f"conjecture sweep needs 4 <= n_min <= n_max <= {CONJ1_CAP}")
    return sweep(n_min, n_max, CONJ1_BOUNDS, GraphClass.CONNECTED, mode="conjecture1", jobs=jobs)


# Auxiliary inequalities.


@dataclass(frozen=True)
class LemmaCheckResult:
    lemma: str
    grid: str
    passed: bool
    minimum: Fraction
    argmin: tuple[Fraction, ...]
    failure: tuple[Fraction, ...] | None = None


def lemma_f(x: Fraction, y: Fraction) -> Fraction:
    x, y = Fraction(x), Fraction(y)
    return (
        (x + 4) / (x * (x + 1) * (x + 2))
        + (y + 4) / (y * (y + 1) * (y + 2))
        - 2 / ((x + y) * (x + y - 2))
    )


def lemma_g(x: Fraction) -> Fraction:
    x = Fraction(x)
    return 1 / (5 + x) + (x - 1) / (2 + x)


G_LOWER = Fraction(11, 28)


def _grid(upper: int, max_denominator: int) -> list[Fraction]:
    """All rationals in ``[2, upper]`` with denominator at most ``max_denominator``."""
    return sorted(
        {Fraction(p, q) for q in range(1, max_denominator + 1) for p in range(2 * q, upper * q + 1)}
    )


def check_lemma_f(x_max: int, y_max: int, *, max_denominator: int = 1) -> LemmaCheckResult:
    """Check ``f(x, y) > 0`` exactly on the grid ``2 <= x <= x_max``, ``2 <= y <= y_max``."""
    if x_max < 2 or y_max < 2 or max_denominator < 1:
        raise GraphInputError("lemma f grid needs x_max, y_max >= 2")
    xs, ys = _grid(x_max, max_denominator), _grid(y_max, max_denominator)
    best, arg, failure = None, (), None
    for x in xs:
        for y in ys:
            v = lemma_f(x, y)
            if best is None or v < best:
                best, arg = v, (x, y)
            if v <= 0 and failure is None:
                failure = (x, y)
    grid = f"x in [2, {x_max}], y in [2, {y_max}], denominators <= {max_denominator}"
    return LemmaCheckResult("f_positive", grid, failure is None, best, arg, failure)


def check_lemma_g(x_max: int, *, max_denominator: int = 1) -> LemmaCheckResult:
    """Check ``x/(x+2) >= g(x) >= 11/28`` and that ``g`` is non-decreasing along the grid."""
    if x_max < 2 or max_denominator < 1:
        raise GraphInputError("lemma g grid needs x_max >= 2")
    xs = _grid(x_max, max_denominator)
    best, arg, failure = None, (), None
    prev = None
    for x in xs:
        v = lemma_g(x)
        if best is None or v < best:
            best, arg = v, (x,)
        ok = x / (x + 2) >= v >= G_LOWER and (prev is None or v >= prev)
        if not ok and failure is None:
            failure = (x,)
        prev = v
    grid = f"x in [2, {x_max}], denominators <= {max_denominator}"
    return LemmaCheckResult("g_chain", grid, failure is None, best, arg, failure)
