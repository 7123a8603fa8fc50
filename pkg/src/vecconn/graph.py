"""Immutable undirected simple graphs, demand instances, and separations.

Vertices are dense integer ids ``0..n-1``. Every operation that changes the
vertex set returns a fresh graph together with an id table mapping new ids
back to the ids of the input graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ContractError, InputError

__all__ = [
    "Graph",
    "Instance",
    "Separation",
    "induced_subgraph",
    "remove_vertices",
    "neighborhood",
    "closed_neighborhood",
    "component",
    "components",
    "glue",
]


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise InputError("adjacency length does not match vertex count")
        for u, nbrs in enumerate(self.adj):
            for w in nbrs:
                if not 0 <= w < self.n:
                    raise InputError(f"vertex id {w} out of range")
                if w == u:
                    raise InputError(f"self-loop at {u}")
                if u not in self.adj[w]:
                    raise InputError(f"asymmetric adjacency {u}-{w}")
        if self.labels is not None and len(self.labels) != self.n:
            raise InputError("label table length does not match vertex count")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, w in edges:
            if not (0 <= u < n and 0 <= w < n):
                raise InputError(f"edge ({u}, {w}) references a vertex outside 0..{n - 1}")
            if u == w:
                raise InputError(f"self-loop at {u}")
            nbrs[u].add(w)
            nbrs[w].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs), tuple(labels) if labels else None)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, tuple(frozenset() for _ in range(n)))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks."""
        return tuple(sum(1 << w for w in nbrs) for nbrs in self.adj)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u in range(self.n) for w in sorted(self.adj[u]) if u < w]

    def has_edge(self, u: int, w: int) -> bool:
        return w in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def check_vertices(self, xs: Iterable[int]) -> frozenset[int]:
        xs = frozenset(xs)
        for x in xs:
            if not isinstance(x, int) or not 0 <= x < self.n:
                raise InputError(f"unknown vertex id {x!r}")
        return xs


@dataclass(frozen=True)
class Instance:
    """A graph with a demand per vertex, a budget ``k`` and a demand bound ``d``."""

    graph: Graph
    demands: tuple[int, ...]
    k: int
    d: int

    def __post_init__(self):
        if len(self.demands) != self.graph.n:
            raise InputError("demand vector length does not match vertex count")
        if self.k < 0 or self.d < 0:
            raise InputError("k and d must be non-negative")
        for v, phi in enumerate(self.demands):
            if phi < 0:
                raise InputError(f"negative demand at {v}")
            if phi > self.d:
                raise InputError(f"demand {phi} at vertex {v} exceeds bound d={self.d}")

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def demand_vertices(self) -> frozenset[int]:
        return frozenset(v for v, phi in enumerate(self.demands) if phi >= 1)

    def with_demands(self, demands: Sequence[int]) -> Instance:
        return Instance(self.graph, tuple(demands), self.k, self.d)


@dataclass(frozen=True)
class Separation:
    """A pair ``(T, U)`` covering ``V`` with no edge between ``T-U`` and ``U-T``."""

    T: frozenset[int]
    U: frozenset[int]

    @property
    def boundary(self) -> frozenset[int]:
        return self.T & self.U

    @property
    def order(self) -> int:
        return len(self.T & self.U)

    def validate(self, g: Graph) -> None:
        g.check_vertices(self.T | self.U)
        if len(self.T | self.U) != g.n:
            raise InputError("separation does not cover every vertex")
        only_t, only_u = self.T - self.U, self.U - self.T
        for u in only_t:
            if g.adj[u] & only_u:
                raise InputError(f"edge between the two sides of the separation at vertex {u}")


def neighborhood(g: Graph, X: Iterable[int]) -> frozenset[int]:
    """Open neighbourhood N(X): vertices outside X adjacent to X."""
    X = g.check_vertices(X)
    out: set[int] = set()
    for x in X:
        out |= g.adj[x]
    return frozenset(out - X)


def closed_neighborhood(g: Graph, X: Iterable[int]) -> frozenset[int]:
    X = g.check_vertices(X)
    return neighborhood(g, X) | X


def component(g: Graph, v: int, removed: Iterable[int] = ()) -> frozenset[int]:
    """Vertices reachable from ``v`` in ``g - removed`` (``v`` itself must survive)."""
    blocked = set(removed)
    seen = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in seen and w not in blocked:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


def components(g: Graph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    blocked = set(removed)
    out = []
    for v in range(g.n):
        if v in blocked:
            continue
        comp = component(g, v, blocked)
        blocked |= comp
        out.append(comp)
    return out


def induced_subgraph(g: Graph, X: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``(g[X], ids)`` where ``ids[new] == old``; new ids follow ascending old ids."""
    ids = sorted(g.check_vertices(X))
    index = {old: new for new, old in enumerate(ids)}
    adj = tuple(frozenset(index[w] for w in g.adj[old] if w in index) for old in ids)
    labels = tuple(g.labels[old] for old in ids) if g.labels else None
    return Graph(len(ids), adj, labels), ids


def remove_vertices(g: Graph, X: Iterable[int]) -> tuple[Graph, list[int]]:
    """``g - X`` with its id table."""
    X = g.check_vertices(X)
    return induced_subgraph(g, (v for v in range(g.n) if v not in X))


def glue(
    g1: Graph,
    g2: Graph,
    z: Sequence[int],
    z2: Sequence[int] | None = None,
) -> tuple[Graph, list[int]]:
    """Glue two graphs along an ordered boundary.

    ``z`` lists the boundary in ``g1``; ``z2`` (defaults to ``z``) lists the
    same boundary in ``g2``, matched position by position. The result keeps
    the ids of ``g1`` and appends the non-boundary vertices of ``g2`` in
    ascending order. Returns the glued graph and ``remap`` with
    ``remap[old id in g2] == id in result``.
    """
    z = list(z)
    z2 = list(z) if z2 is None else list(z2)
    if len(z) != len(z2) or len(set(z)) != len(z) or len(set(z2)) != len(z2):
        raise InputError("boundary lists must be duplicate-free and of equal length")
    g1.check_vertices(z)
    g2.check_vertices(z2)
    for i in range(len(z)):
        for j in range(i + 1, len(z)):
            if g1.has_edge(z[i], z[j]) != g2.has_edge(z2[i], z2[j]):
                raise ContractError(
                    f"boundary graphs differ on pair ({z[i]}, {z[j]}) / ({z2[i]}, {z2[j]})"
                )
    remap = [-1] * g2.n
    for a, b in zip(z, z2):
        remap[b] = a
    nxt = g1.n
    for u in range(g2.n):
        if remap[u] < 0:
            remap[u] = nxt
            nxt += 1
    edges = g1.edges()
    edges += [(remap[u], remap[w]) for u, w in g2.edges()]
    labels = None
    if g1.labels or g2.labels:
        labels = [g1.label(u) for u in range(g1.n)] + [""] * (nxt - g1.n)
        for u in range(g2.n):
            if remap[u] >= g1.n:
                labels[remap[u]] = g2.label(u)
    return Graph.from_edges(nxt, edges, labels), remap
