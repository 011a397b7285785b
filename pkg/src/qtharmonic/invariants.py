"""Harmonic index, the catalogue of diameter bounds, and per-graph verdicts.

All values are :class:`fractions.Fraction`; nothing here touches floating
point, so ties between an index and a bound are detected exactly.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, GraphInputError
from .graph import Graph, delete_vertex, diameter, is_connected

Rational = Fraction


def harmonic_index(g: Graph) -> Fraction:
    """Sum of ``2 / (d_u + d_v)`` over all edges ``uv``."""
    if g.edge_count == 0:
        raise DomainError("harmonic index is undefined for an edgeless graph")
    deg = g.degrees()
    return sum((Fraction(2, deg[u] + deg[v]) for u, v in g.edges()), Fraction(0))


class BoundId(enum.Enum):
    QT_ADDITIVE = "qt_additive"
    QT_MULTIPLICATIVE = "qt_multiplicative"
    CONJ1_ADDITIVE = "conj1_additive"
    CONJ1_MULTIPLICATIVE = "conj1_multiplicative"
    TREE_ADDITIVE = "tree_additive"
    TREE_MULTIPLICATIVE = "tree_multiplicative"
    UPPER_ADDITIVE = "upper_additive"
    UPPER_MULTIPLICATIVE = "upper_multiplicative"

    @property
    def is_upper(self) -> bool:
        return self in (BoundId.UPPER_ADDITIVE, BoundId.UPPER_MULTIPLICATIVE)


QT_BOUNDS = (BoundId.QT_ADDITIVE, BoundId.QT_MULTIPLICATIVE)
CONJ1_BOUNDS = (BoundId.CONJ1_ADDITIVE, BoundId.CONJ1_MULTIPLICATIVE)
TREE_BOUNDS = (BoundId.TREE_ADDITIVE, BoundId.TREE_MULTIPLICATIVE)
UPPER_BOUNDS = (BoundId.UPPER_ADDITIVE, BoundId.UPPER_MULTIPLICATIVE)

# Human-readable formulas, used in text reports.
BOUND_FORMULAS = {
    BoundId.QT_ADDITIVE: "H >= D + 5/3 - n/2",
    BoundId.QT_MULTIPLICATIVE: "H >= (1/2 + 2/(3(n-2))) D",
    BoundId.CONJ1_ADDITIVE: "H >= D + 5/6 - n/2",
    BoundId.CONJ1_MULTIPLICATIVE: "H >= (1/2 + 1/(3(n-1))) D",
    BoundId.TREE_ADDITIVE: "H >= D + 5/6 - n/2",
    BoundId.TREE_MULTIPLICATIVE: "H >= (1/2 + 1/(3(n-1))) D",
    BoundId.UPPER_ADDITIVE: "H <= D + n/2 - 1",
    BoundId.UPPER_MULTIPLICATIVE: "H <= (n/2) D",
}


def bound_value(bound: BoundId, n: int, D: int) -> Fraction:
    """Exact value of ``bound`` for a graph of order ``n`` and diameter ``D``."""
    if D < 1 or n < 2:
        raise DomainError(f"need n >= 2 and D >= 1, got n={n}, D={D}")
    if bound in QT_BOUNDS and n < 3:
        raise DomainError("quasi-tree bounds need n >= 3")
    half_n = Fraction(n, 2)
    if bound is BoundId.QT_ADDITIVE:
        return D + Fraction(5, 3) - half_n
    if bound is BoundId.QT_MULTIPLICATIVE:
        return (Fraction(1, 2) + Fraction(2, 3 * (n - 2))) * D
    if bound in (BoundId.CONJ1_ADDITIVE, BoundId.TREE_ADDITIVE):
        return D + Fraction(5, 6) - half_n
    if bound in (BoundId.CONJ1_MULTIPLICATIVE, BoundId.TREE_MULTIPLICATIVE):
        return (Fraction(1, 2) + Fraction(1, 3 * (n - 1))) * D
    if bound is BoundId.UPPER_ADDITIVE:
        return D + half_n - 1
    if bound is BoundId.UPPER_MULTIPLICATIVE:
        return half_n * D
    raise GraphInputError(f"unknown bound {bound!r}")


class Status(enum.Enum):
    STRICT = "strict"
    EQUAL = "equal"
    VIOLATED = "violated"


def compare(H: Fraction, value: Fraction, *, upper: bool = False) -> Status:
    if H == value:
        return Status.EQUAL
    holds = H < value if upper else H > value
    return Status.STRICT if holds else Status.VIOLATED


@dataclass(frozen=True)
class Verdict:
    n: int
    D: int
    H: Fraction
    bound_values: dict[BoundId, Fraction] = field(default_factory=dict)
    status: dict[BoundId, Status] = field(default_factory=dict)

    def slack(self, bound: BoundId) -> Fraction:
        """Signed distance to the bound; positive means strictly satisfied."""
        diff = self.H - self.bound_values[bound]
        return -diff if bound.is_upper else diff

    @property
    def violated(self) -> tuple[BoundId, ...]:
        return tuple(b for b, s in self.status.items() if s is Status.VIOLATED)

    @property
    def equal(self) -> tuple[BoundId, ...]:
        return tuple(b for b, s in self.status.items() if s is Status.EQUAL)


def evaluate(g: Graph, bounds: Iterable[BoundId] = QT_BOUNDS) -> Verdict:
    """Compute ``H``, ``D`` and the status of ``g`` against each requested bound."""
    D = diameter(g)
    H = harmonic_index(g)
    values = {}
    status = {}
    for b in bounds:
        values[b] = bound_value(b, g.n, D)
        status[b] = compare(H, values[b], upper=b.is_upper)
    return Verdict(g.n, D, H, values, status)


# Deletion identities. ``t`` is the deleted vertex, ``r`` (and ``s``) its
# neighbours; all degrees are taken in ``g`` before deletion.


def pendant_deletion_delta(g: Graph, t: int) -> Fraction:
    """``H(g) - H(g - t)`` for a pendant vertex ``t``, from degrees in ``g`` only.

    With ``r`` the neighbour of ``t``, the edge ``rt`` contributes
    ``2/(d_r + 1)`` and every other edge ``rx`` gains
    ``2/((d_r + d_x - 1)(d_r + d_x))`` in weight when ``t`` is removed.
    """
    if g.degree(t) != 1:
        raise GraphInputError(f"vertex {t} is not pendant (degree {g.degree(t)})")
    (r,) = g.neighbors(t)
    dr = g.degree(r)
    delta = Fraction(2, dr + 1)
    for x in g.neighbors(r):
        if x != t:
            s = dr + g.degree(x)
            delta -= Fraction(2, (s - 1) * s)
    return delta


class Degree2Case(enum.Enum):
    NONADJACENT = "nonadjacent"
    ADJACENT = "adjacent"


@dataclass(frozen=True)
class DeletionDelta:
    value: Fraction
    case: Degree2Case


def degree2_deletion_delta(g: Graph, t: int) -> DeletionDelta:
    """``H(g) - H(g - t)`` for a degree-2 vertex ``t`` with neighbours ``r``, ``s``.

    Non-adjacent ``r, s``::

        2/(2+d_r) + 2/(2+d_s)
          - sum_{x in N(r), x != t} 2/((d_r+d_x-1)(d_r+d_x))
          - sum_{y in N(s), y != t} 2/((d_s+d_y-1)(d_s+d_y))

    Adjacent ``r, s``: the edge ``rs`` moves from ``2/(d_r+d_s-2)`` to
    ``2/(d_r+d_s)`` and is excluded from both sums.
    """
    if g.degree(t) != 2:
        raise GraphInputError(f"vertex {t} does not have degree 2 (degree {g.degree(t)})")
    if not is_connected(delete_vertex(g, t)):
        raise GraphInputError(f"deleting vertex {t} disconnects the graph")
    r, s = g.neighbors(t)
    dr, ds = g.degree(r), g.degree(s)
    adjacent = g.has_edge(r, s)

    def shifted(a: int, da: int, skip: tuple[int, ...]) -> Fraction:
        total = Fraction(0)
        for x in g.neighbors(a):
            if x not in skip:
                k = da + g.degree(x)
                total += Fraction(2, (k - 1) * k)
        return total

    delta = Fraction(2, 2 + dr) + Fraction(2, 2 + ds)
    if adjacent:
        delta += Fraction(2, dr + ds) - Fraction(2, dr + ds - 2)
        delta -= shifted(r, dr, (t, s)) + shifted(s, ds, (t, r))
        return DeletionDelta(delta, Degree2Case.ADJACENT)
    delta -= shifted(r, dr, (t,)) + shifted(s, ds, (t,))
    return DeletionDelta(delta, Degree2Case.NONADJACENT)
