"""Constructors for the named graph families and their closed-form ``H`` and ``D``.

Vertex numbering is fixed per family so tests can refer to vertices by id:

``U(n)``  (C4 with a pendant and a path of ``n - 5`` edges on antipodal vertices)
    cycle ``0-1-2-3-0``; pendant ``4`` on vertex 0; path ``5, 6, ..., n-1``
    hanging from vertex 2.
``V(r,s)`` (K4 minus an edge, paths of ``r`` and ``s`` edges on its two degree-2 vertices)
    ``0`` and ``2`` are the degree-2 tips, ``1`` and ``3`` the hubs (edges
    01 12 23 30 13); the ``r``-path follows as ``4..3+r`` from vertex 0,
    then the ``s``-path from vertex 2.
``U641`` is ``U(6)``; ``U531`` is the triangle ``0 1 2`` with pendants ``3``
on 0 and ``4`` on 1; ``K13+`` is the star with centre 0 and leaves 1, 2, 3
plus vertex 4 hanging off leaf 1.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import GraphInputError, UnsupportedError
from .graph import Graph, complete_graph, cycle_graph, path_graph, star_graph


class FamilyKind(enum.Enum):
    U_N4 = "U"
    V_RS = "V"
    U_641_1 = "U641"
    U_531_1 = "U531"
    PATH = "P"
    CYCLE = "C"
    COMPLETE = "K"
    STAR = "S"
    K4_MINUS = "K4-"
    K13_PLUS = "K13+"


_ARITY = {
    FamilyKind.U_N4: 1,
    FamilyKind.V_RS: 2,
    FamilyKind.PATH: 1,
    FamilyKind.CYCLE: 1,
    FamilyKind.COMPLETE: 1,
    FamilyKind.STAR: 1,
}
_MIN_N = {
    FamilyKind.U_N4: 6,
    FamilyKind.PATH: 1,
    FamilyKind.CYCLE: 3,
    FamilyKind.COMPLETE: 1,
    FamilyKind.STAR: 2,
}


@dataclass(frozen=True)
class FamilySpec:
    kind: FamilyKind
    params: tuple[int, ...] = ()

    def __post_init__(self):
        arity = _ARITY.get(self.kind, 0)
        if len(self.params) != arity:
            raise GraphInputError(f"{self.kind.value} takes {arity} parameter(s), got {len(self.params)}")
        if any(not isinstance(p, int) or p < 0 for p in self.params):
            raise GraphInputError(f"family parameters must be non-negative integers: {self.params}")
        if self.kind in _MIN_N and self.params[0] < _MIN_N[self.kind]:
            raise GraphInputError(f"{self.kind.value}(n) requires n >= {_MIN_N[self.kind]}")

    @property
    def order(self) -> int:
        if self.kind is FamilyKind.V_RS:
            return 4 + sum(self.params)
        if self.kind in _ARITY:
            return self.params[0]
        return {FamilyKind.U_641_1: 6, FamilyKind.U_531_1: 5, FamilyKind.K4_MINUS: 4, FamilyKind.K13_PLUS: 5}[self.kind]

    def __str__(self) -> str:
        if self.params:
            return f"{self.kind.value}({','.join(map(str, self.params))})"
        return self.kind.value


def U(n: int) -> FamilySpec:
    return FamilySpec(FamilyKind.U_N4, (n,))


def V(r: int, s: int) -> FamilySpec:
    return FamilySpec(FamilyKind.V_RS, (r, s))


U641 = FamilySpec(FamilyKind.U_641_1)
U531 = FamilySpec(FamilyKind.U_531_1)
K4_MINUS = FamilySpec(FamilyKind.K4_MINUS)
K13_PLUS = FamilySpec(FamilyKind.K13_PLUS)

_SPEC_RE = re.compile(r"^\s*([A-Za-z]+)\s*\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)\s*$")
_FIXED = {"U641": U641, "U531": U531, "K4-": K4_MINUS, "K13+": K13_PLUS}
_BY_LETTER = {k.value: k for k in _ARITY}


def parse_family(text: str) -> FamilySpec:
    """Parse ``U(n)``, ``V(r,s)``, ``P(n)``, ``C(n)``, ``K(n)``, ``S(n)``,
    ``U641``, ``U531``, ``K4-`` or ``K13+`` (case-insensitive)."""
    key = text.strip().upper().replace(" ", "")
    if key in _FIXED:
        return _FIXED[key]
    m = _SPEC_RE.match(key)
    if not m or m.group(1) not in _BY_LETTER:
        raise GraphInputError(f"unrecognised family spec {text!r}")
    params = tuple(int(g) for g in m.groups()[1:] if g is not None)
    return FamilySpec(_BY_LETTER[m.group(1)], params)


def _hang_path(edges: list[tuple[int, int]], anchor: int, length: int, start: int) -> int:
    """Append a path of ``length`` new vertices ``start, start+1, ...`` to ``anchor``."""
    prev = anchor
    for v in range(start, start + length):
        edges.append((prev, v))
        prev = v
    return start + length


def build(spec: FamilySpec) -> Graph:
    kind, p = spec.kind, spec.params
    if kind is FamilyKind.PATH:
        return path_graph(p[0])
    if kind is FamilyKind.CYCLE:
        return cycle_graph(p[0])
    if kind is FamilyKind.COMPLETE:
        return complete_graph(p[0])
    if kind is FamilyKind.STAR:
        return star_graph(p[0])
    if kind in (FamilyKind.U_N4, FamilyKind.U_641_1):
        n = p[0] if p else 6
        edges = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]
        _hang_path(edges, 2, n - 5, 5)
        return Graph(n, edges)
    if kind in (FamilyKind.V_RS, FamilyKind.K4_MINUS):
        r, s = p if p else (0, 0)
        edges = [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]
        nxt = _hang_path(edges, 0, r, 4)
        _hang_path(edges, 2, s, nxt)
        return Graph(4 + r + s, edges)
    if kind is FamilyKind.U_531_1:
        return Graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])
    if kind is FamilyKind.K13_PLUS:
        return Graph(5, [(0, 1), (0, 2), (0, 3), (1, 4)])
    raise UnsupportedError(f"no constructor for {kind}")


def _path_index(n: int) -> Fraction:
    if n == 2:
        return Fraction(1)
    return Fraction(4, 3) + Fraction(n - 3, 2)


def _v_index(r: int, s: int) -> Fraction:
    r, s = sorted((r, s))
    D = r + s + 2
    fixed = {(0, 0): Fraction(29, 15), (0, 1): Fraction(23, 10), (1, 1): Fraction(8, 3)}
    if (r, s) in fixed:
        return fixed[(r, s)]
    offset = {0: Fraction(13, 15), 1: Fraction(11, 15)}.get(r, Fraction(4, 5))
    return Fraction(D, 2) + offset


def closed_form(spec: FamilySpec) -> tuple[Fraction, int]:
    """``(H, D)`` from formulas rather than from the constructed graph."""
    kind, p = spec.kind, spec.params
    if kind is FamilyKind.V_RS:
        return _v_index(*p), p[0] + p[1] + 2
    if kind is FamilyKind.U_N4:
        n = p[0]
        if n < 7:
            raise UnsupportedError("closed form for U(n) holds only for n >= 7; use U641 for n = 6")
        return Fraction(n, 2) - Fraction(1, 3), n - 2
    if kind is FamilyKind.PATH:
        n = p[0]
        if n < 2:
            raise UnsupportedError("P(1) has no edges, so H is undefined")
        return _path_index(n), n - 1
    if kind is FamilyKind.CYCLE:
        n = p[0]
        return Fraction(n, 2), n // 2
    if kind is FamilyKind.STAR:
        n = p[0]
        return Fraction(2 * (n - 1), n), 1 if n == 2 else 2
    if kind is FamilyKind.COMPLETE:
        n = p[0]
        if n < 2:
            raise UnsupportedError("K(1) has no edges, so H is undefined")
        return Fraction(n, 2), 1
    raise UnsupportedError(f"no closed form for {spec}")
