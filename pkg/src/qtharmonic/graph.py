"""Simple undirected graphs on vertices ``0..n-1`` and the structural queries
the rest of the package needs: degrees, BFS distances, diameter, tree and
quasi-tree tests, and vertex deletion.

Graphs are immutable; every operation returns a new value.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Iterator, Sequence

from .errors import DomainError, GraphInputError

MAX_VERTICES = 64


class Graph:
    """Immutable simple undirected graph with sorted adjacency tuples."""

    __slots__ = ("_n", "_adj", "_m", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, int) or n < 0:
            raise GraphInputError(f"vertex count must be a non-negative integer, got {n!r}")
        if n > MAX_VERTICES:
            raise GraphInputError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._set(n, tuple(tuple(sorted(s)) for s in nbrs))

    def _set(self, n: int, adj: tuple[tuple[int, ...], ...]) -> None:
        self._n = n
        self._adj = adj
        self._m = sum(len(a) for a in adj) // 2
        self._hash = None

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Iterable[int]]) -> Graph:
        """Build from a neighbour list per vertex; symmetry is enforced, not assumed."""
        n = len(adjacency)
        return cls(n, ((u, v) for u, vs in enumerate(adjacency) for v in vs))

    @property
    def n(self) -> int:
        return self._n

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    @property
    def edge_count(self) -> int:
        return self._m

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, vs in enumerate(self._adj):
            for v in vs:
                if u < v:
                    yield u, v

    def relabel(self, order: Sequence[int]) -> Graph:
        """Return the graph whose vertex ``i`` is this graph's vertex ``order[i]``."""
        if sorted(order) != list(range(self._n)):
            raise GraphInputError("relabel order must be a permutation of the vertices")
        pos = {v: i for i, v in enumerate(order)}
        return Graph(self._n, ((pos[u], pos[v]) for u, v in self.edges()))

    def add_edge(self, u: int, v: int) -> Graph:
        if self.has_edge(u, v):
            raise GraphInputError(f"edge ({u}, {v}) already present")
        return Graph(self._n, [*self.edges(), (u, v)])

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self._n):
            raise GraphInputError(f"vertex {v!r} out of range for a graph on {self._n} vertices")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={list(self.edges())})"


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def min_degree(g: Graph) -> int:
    if g.n < 1:
        raise DomainError("minimum degree of the empty graph is undefined")
    return min(g.degrees())


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Hop distances from ``source``; unreachable vertices get ``math.inf``."""
    dist: list[float] = [math.inf] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] == math.inf:
                dist[v] = du
                queue.append(v)
    return dist


def distance_matrix(g: Graph) -> list[list[float]]:
    """All-pairs hop counts by BFS from every vertex (``math.inf`` if unreachable)."""
    return [bfs_distances(g, s) for s in range(g.n)]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise DomainError("connectivity of the empty graph is undefined")
    return math.inf not in bfs_distances(g, 0)


def diameter(g: Graph) -> int:
    if g.n == 0 or not is_connected(g):
        raise DomainError("diameter is only defined for connected graphs")
    return int(max(max(row) for row in distance_matrix(g)))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.edge_count == g.n - 1 and is_connected(g)


def is_unicyclic(g: Graph) -> bool:
    return g.n >= 3 and g.edge_count == g.n and is_connected(g)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove ``v``; the remaining vertices keep their relative order."""
    g._check_vertex(v)
    shift = lambda x: x - 1 if x > v else x  # noqa: E731
    return Graph(g.n - 1, ((shift(a), shift(b)) for a, b in g.edges() if v not in (a, b)))


def quasi_tree_witnesses(g: Graph) -> list[int]:
    """All vertices ``v`` such that ``g - v`` is a tree, in ascending order.

    Trees can have witnesses too; use :func:`is_quasi_tree` for the
    classification, which additionally requires ``g`` not to be a tree.
    """
    if g.n == 0 or not is_connected(g):
        raise DomainError("quasi-tree witnesses require a connected graph")
    if g.n == 1:
        return []
    # G - v has n - 1 vertices and m - d_v edges; a tree needs m - d_v == n - 2.
    return [
        v
        for v in range(g.n)
        if g.edge_count - g.degree(v) == g.n - 2 and is_tree(delete_vertex(g, v))
    ]


def is_quasi_tree(g: Graph) -> bool:
    if g.n == 0 or not is_connected(g):
        return False
    return not is_tree(g) and bool(quasi_tree_witnesses(g))


# Small named graphs used across tests and docs.


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("a cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices with centre 0 (``K_{1,n-1}``)."""
    return Graph(n, ((0, i) for i in range(1, n)))
