"""Isomorphism-free generation of small graphs.

Canonical forms come from a pruned search over vertex orderings: vertices are
first split into cells by colour refinement (an isomorphism invariant), then
positions are filled one at a time, keeping only the partial orderings whose
upper-triangle prefix is lexicographically smallest (interchangeable twin
vertices are tried once).  The result is the
minimum over all cell-respecting orderings, so equal forms mean isomorphic
graphs and vice versa.

Two generators for quasi-trees are kept on purpose and checked against each
other: :func:`enumerate_class` grows quasi-trees one vertex at a time from
smaller trees and quasi-trees, while :func:`quasi_trees_via_trees` joins a new
vertex ``w`` to a subset of a tree on ``n - 1`` vertices.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import CapacityError, GraphInputError
from .graph import Graph, is_connected, is_quasi_tree, is_tree, is_unicyclic

CANONICAL_CAP = 12
CONNECTED_CAP = 9
TREE_CAP = 11
VIA_TREES_CAP = 10


class GraphClass(enum.Enum):
    CONNECTED = "connected"
    TREE = "tree"
    UNICYCLIC = "unicyclic"
    QUASI_TREE = "quasi-tree"


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Order ``n`` plus the upper-triangle bits (graph6 column order) of the canonical isomorph."""

    n: int
    bits: str


def _refine(g: Graph) -> list[int]:
    """Stable colour refinement; colours are small ints ordered canonically."""
    adj = g.adjacency
    colours = [len(a) for a in adj]
    n_colours = len(set(colours))
    while True:
        sigs = [(colours[v], tuple(sorted(colours[u] for u in adj[v]))) for v in range(g.n)]
        ranking = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        colours = [ranking[s] for s in sigs]
        if len(ranking) == n_colours:
            return colours
        n_colours = len(ranking)


def canonical_labeling(g: Graph) -> tuple[CanonicalForm, tuple[int, ...]]:
    """Canonical form of ``g`` and one ordering of its vertices that realises it."""
    n = g.n
    if n > CANONICAL_CAP:
        raise CapacityError(f"canonical form is capped at {CANONICAL_CAP} vertices, got {n}")
    adj = [set(a) for a in g.adjacency]
    colours = _refine(g)
    # Twins (N(u) - {v} == N(v) - {u}) are swapped by an automorphism fixing
    # everything else, so only the first unused twin of a class needs trying.
    twin_class = list(range(n))
    for v in range(n):
        for u in range(v):
            if twin_class[u] == u and adj[u] - {v} == adj[v] - {u}:
                twin_class[v] = u
                break
    # Position j must be filled from the cell holding the j-th smallest colour.
    slot_colour = sorted(colours)

    partials: list[tuple[int, ...]] = [()]
    best_bits: list[str] = []
    for j in range(n):
        want = slot_colour[j]
        best_col = None
        survivors: list[tuple[int, ...]] = []
        for order in partials:
            used = set(order)
            tried = set()
            for v in range(n):
                if v in used or colours[v] != want or twin_class[v] in tried:
                    continue
                tried.add(twin_class[v])
                col = "".join("1" if u in adj[v] else "0" for u in order)
                if best_col is None or col < best_col:
                    best_col = col
                    survivors = [order + (v,)]
                elif col == best_col:
                    survivors.append(order + (v,))
        partials = survivors
        best_bits.append(best_col or "")
    return CanonicalForm(n, "".join(best_bits)), partials[0]


def canonical_form(g: Graph) -> CanonicalForm:
    return canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    """The canonical isomorph of ``g`` (vertex ``i`` is the ``i``-th vertex of the canonical ordering)."""
    return g.relabel(canonical_labeling(g)[1])


def graph_from_form(form: CanonicalForm) -> Graph:
    edges = []
    k = 0
    for j in range(form.n):
        for i in range(j):
            if form.bits[k] == "1":
                edges.append((i, j))
            k += 1
    return Graph(form.n, edges)


def _dedup(candidates: Iterable[Graph]) -> list[Graph]:
    """One canonical representative per isomorphism class, sorted by canonical form."""
    seen: dict[CanonicalForm, Graph] = {}
    for g in candidates:
        form, order = canonical_labeling(g)
        if form not in seen:
            seen[form] = g.relabel(order)
    return [seen[f] for f in sorted(seen)]


def _extend(g: Graph, neighbourhood: Iterable[int]) -> Graph:
    n = g.n
    return Graph(n + 1, [*g.edges(), *((u, n) for u in neighbourhood)])


def _nonempty_subsets(n: int, min_size: int = 1) -> Iterator[tuple[int, ...]]:
    for k in range(min_size, n + 1):
        yield from combinations(range(n), k)


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    return tuple(_dedup(_extend(t, (v,)) for t in _trees(n - 1) for v in range(n - 1)))


@lru_cache(maxsize=None)
def _connected(n: int) -> tuple[Graph, ...]:
    # Every connected graph has a non-cut vertex, so it arises from a
    # connected graph on n - 1 vertices plus one vertex.
    if n == 1:
        return (Graph(1),)
    return tuple(
        _dedup(_extend(g, sub) for g in _connected(n - 1) for sub in _nonempty_subsets(n - 1))
    )


@lru_cache(maxsize=None)
def _unicyclic(n: int) -> tuple[Graph, ...]:
    cands = []
    for t in _trees(n):
        for u, v in combinations(range(n), 2):
            if not t.has_edge(u, v):
                cands.append(t.add_edge(u, v))
    return tuple(_dedup(cands))


@lru_cache(maxsize=None)
def _quasi_trees(n: int) -> tuple[Graph, ...]:
    # If w witnesses a quasi-tree G and v is a leaf of the tree G - w, then
    # G - v is connected (w keeps another neighbour) and G - v - w is a tree,
    # so G - v is a tree or a quasi-tree on n - 1 vertices.
    if n < 3:
        return ()
    parents = _trees(n - 1) + _quasi_trees(n - 1)
    cands = (_extend(g, sub) for g in parents for sub in _nonempty_subsets(n - 1))
    return tuple(g for g in _dedup(cands) if is_quasi_tree(g))


def _check_cap(n: int, cap: int, what: str) -> None:
    if not isinstance(n, int) or n < 1:
        raise GraphInputError(f"order must be a positive integer, got {n!r}")
    if n > cap:
        raise CapacityError(f"{what} enumeration is capped at n <= {cap}, got {n}")


def enumerate_class(n: int, cls: GraphClass | str) -> Iterator[Graph]:
    """Yield one canonical representative per isomorphism class of order ``n`` in ``cls``.

    Output order is by canonical form and does not depend on anything else.
    """
    cls = GraphClass(cls)
    if cls is GraphClass.TREE:
        _check_cap(n, TREE_CAP, "tree")
        yield from _trees(n)
    elif cls is GraphClass.UNICYCLIC:
        _check_cap(n, TREE_CAP, "unicyclic")
        yield from _unicyclic(n) if n >= 3 else ()
    elif cls is GraphClass.CONNECTED:
        _check_cap(n, CONNECTED_CAP, "connected")
        yield from _connected(n)
    else:
        _check_cap(n, CONNECTED_CAP, "quasi-tree")
        yield from _quasi_trees(n)


def quasi_trees_via_trees(n: int) -> Iterator[Graph]:
    """Quasi-trees of order ``n`` built as a tree on ``n - 1`` vertices plus a vertex ``w``
    joined to at least two of its vertices."""
    _check_cap(n, VIA_TREES_CAP, "tree-augmentation quasi-tree")
    if n < 3:
        return
    cands = (_extend(t, sub) for t in _trees(n - 1) for sub in _nonempty_subsets(n - 1, 2))
    yield from (g for g in _dedup(cands) if is_quasi_tree(g))


def brute_force_class(n: int, cls: GraphClass | str) -> list[Graph]:
    """Reference enumeration over all ``2^(n(n-1)/2)`` labelled graphs; only for tiny ``n``."""
    cls = GraphClass(cls)
    if n > 6:
        raise CapacityError("brute-force enumeration is capped at n <= 6")
    test = {
        GraphClass.CONNECTED: is_connected,
        GraphClass.TREE: is_tree,
        GraphClass.UNICYCLIC: is_unicyclic,
        GraphClass.QUASI_TREE: is_quasi_tree,
    }[cls]
    pairs = list(combinations(range(n), 2))
    found = []
    for mask in range(1 << len(pairs)):
        g = Graph(n, (p for i, p in enumerate(pairs) if mask >> i & 1))
        if test(g):
            found.append(g)
    return _dedup(found)
