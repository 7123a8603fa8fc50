"""Vertex-capacitated flow primitives.

Every path count here is a count of *v-independent* paths: paths that are
pairwise vertex-disjoint except that they may share their start vertex
``v``. In flow terms ``v`` has unbounded capacity and every other vertex has
capacity one. Networks use the usual vertex split ``in(u) -> out(u)`` and
are solved with BFS augmenting paths, which is plenty for the small flow
values (bounded by ``d`` or ``k``) that the algorithms need.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import InputError
from .graph import Graph, Instance, Separation, component, induced_subgraph

__all__ = [
    "SeparatorResult",
    "PackingQuery",
    "max_independent_paths",
    "min_vs_separator",
    "closest_min_separator",
    "is_closest",
    "constrained_packing_exists",
    "verify_solution",
    "split_packing_check",
]

_INF = 1 << 30


class _Network:
    __slots__ = ("first", "to", "cap", "nxt")

    def __init__(self, size):
        self.first = [-1] * size
        self.to = []
        self.cap = []
        self.nxt = []

    def add(self, u, w, c):
        to, cap, nxt, first = self.to, self.cap, self.nxt, self.first
        to.append(w)
        cap.append(c)
        nxt.append(first[u])
        first[u] = len(to) - 1
        to.append(u)
        cap.append(0)
        nxt.append(first[w])
        first[w] = len(to) - 1

    def max_flow(self, s, t, limit=None):
        to, cap, nxt, first = self.to, self.cap, self.nxt, self.first
        flow = 0
        while limit is None or flow < limit:
            parent = [-2] * len(first)
            parent[s] = -1
            queue = deque([s])
            while queue and parent[t] == -2:
                u = queue.popleft()
                e = first[u]
                while e >= 0:
                    w = to[e]
                    if cap[e] > 0 and parent[w] == -2:
                        parent[w] = e
                        queue.append(w)
                    e = nxt[e]
            if parent[t] == -2:
                break
            push = _INF
            w = t
            while w != s:
                e = parent[w]
                push = min(push, cap[e])
                w = to[e ^ 1]
            w = t
            while w != s:
                e = parent[w]
                cap[e] -= push
                cap[e ^ 1] += push
                w = to[e ^ 1]
            flow += push
        return flow

    def reachable(self, s):
        to, cap, nxt, first = self.to, self.cap, self.nxt, self.first
        seen = [False] * len(first)
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            e = first[u]
            while e >= 0:
                w = to[e]
                if cap[e] > 0 and not seen[w]:
                    seen[w] = True
                    queue.append(w)
                e = nxt[e]
        return seen


def _source_sink_network(g: Graph, v: int, sinks: frozenset[int]):
    # in(u) = 2u, out(u) = 2u + 1, sink = 2n; the source is out(v).
    n = g.n
    net = _Network(2 * n + 1)
    for u in range(n):
        if u != v:
            net.add(2 * u, 2 * u + 1, 1)
        for w in g.adj[u]:
            if w != v:
                net.add(2 * u + 1, 2 * w, _INF)
    for s in sinks:
        net.add(2 * s + 1, 2 * n, _INF)
    return net


def _check_source(g: Graph, v: int, S) -> frozenset[int]:
    S = g.check_vertices(S)
    g.check_vertices([v])
    if v in S:
        raise InputError(f"source vertex {v} lies in the sink set")
    return S


def max_independent_paths(g: Graph, v: int, S: Iterable[int], limit: int | None = None) -> int:
    """Maximum number of v-independent paths from ``v`` to distinct vertices of ``S``.

    With ``limit`` the search stops once that many paths are found.
    """
    S = _check_source(g, v, S)
    if not S:
        return 0
    net = _source_sink_network(g, v, S)
    return net.max_flow(2 * v + 1, 2 * g.n, limit)


@dataclass(frozen=True)
class SeparatorResult:
    source: int
    sinks: frozenset[int]
    cut: frozenset[int]
    component: frozenset[int]
    degenerate: bool = False

    @property
    def size(self) -> int:
        return len(self.cut)


def closest_min_separator(g: Graph, v: int, S: Iterable[int]) -> SeparatorResult:
    """The minimum v,S-separator whose component of ``v`` is smallest.

    The cut is read off the residual network of a maximum flow: a vertex is
    cut when its in-copy is reachable from ``v`` but its out-copy is not.
    An empty ``S`` yields the empty cut, flagged ``degenerate``.
    """
    S = _check_source(g, v, S)
    if not S:
        return SeparatorResult(v, S, frozenset(), component(g, v), degenerate=True)
    net = _source_sink_network(g, v, S)
    net.max_flow(2 * v + 1, 2 * g.n)
    seen = net.reachable(2 * v + 1)
    cut = frozenset(u for u in range(g.n) if u != v and seen[2 * u] and not seen[2 * u + 1])
    return SeparatorResult(v, S, cut, component(g, v, cut))


def min_vs_separator(g: Graph, v: int, S: Iterable[int]) -> SeparatorResult:
    """A minimum-cardinality v,S-separator (the closest one is returned)."""
    return closest_min_separator(g, v, S)


def is_closest(g: Graph, v: int, C: Iterable[int]) -> bool:
    """True iff ``C`` is the unique v,C-separator of size at most ``|C|``."""
    C = _check_source(g, v, C)
    if not C:
        return True
    return closest_min_separator(g, v, C).cut == C


@dataclass(frozen=True)
class PackingQuery:
    """A ``(v, i, A, B)``-constrained path packing question in ``H - C``.

    ``v`` may be ``None`` only when ``i == 0``. When ``v`` is given it is
    used purely as a start vertex: no path passes through it.
    """

    H: Graph
    v: int | None
    i: int
    A: frozenset[int]
    B: frozenset[int]
    C: frozenset[int] = frozenset()

    def __post_init__(self):
        for name in ("A", "B", "C"):
            object.__setattr__(self, name, self.H.check_vertices(getattr(self, name)))
        if self.i < 0:
            raise InputError("path multiplicity must be non-negative")
        if self.v is None:
            if self.i > 0:
                raise InputError("a packing with i > 0 needs a start vertex v")
        else:
            self.H.check_vertices([self.v])
            if self.v in self.A or self.v in self.C:
                raise InputError("v must lie outside A and C")
            if self.i > 0 and self.v in self.B:
                raise InputError("v must lie outside B when i > 0")
        if self.A & self.C or self.B & self.C:
            raise InputError("A and B must avoid the forbidden set C")


def constrained_packing_exists(q: PackingQuery) -> bool:
    """Decide whether ``H - C`` has ``i + |A|`` v-independent paths from ``A + {v}`` to ``B``.

    Vertices of ``A & B`` are length-zero paths and are deleted; ``i``
    clones of ``v`` and the remaining ``A`` vertices hang off a super
    source, ``B`` hangs off a super sink.
    """
    H = q.H
    zero = q.A & q.B
    dead = set(q.C) | zero
    if q.v is not None:
        dead.add(q.v)
    sources = [a for a in q.A if a not in zero]
    need = q.i + len(sources)
    if need == 0:
        return True
    n = H.n
    s, t = 2 * n, 2 * n + 1
    base = 2 * n + 2
    net = _Network(base + 2 * q.i)
    for u in range(n):
        if u in dead:
            continue
        net.add(2 * u, 2 * u + 1, 1)
        for w in H.adj[u]:
            if w not in dead:
                net.add(2 * u + 1, 2 * w, _INF)
    for a in sources:
        net.add(s, 2 * a, 1)
    if q.i:
        entry = [w for w in H.adj[q.v] if w not in dead]
        for j in range(q.i):
            cin, cout = base + 2 * j, base + 2 * j + 1
            net.add(s, cin, 1)
            net.add(cin, cout, 1)
            for w in entry:
                net.add(cout, 2 * w, _INF)
    for b in q.B:
        if b not in dead:
            net.add(2 * b + 1, t, 1)
    return net.max_flow(s, t, need) >= need


def verify_solution(inst: Instance, S: Iterable[int]) -> bool:
    """True iff every vertex of positive demand is in ``S`` or has enough paths to ``S``."""
    g = inst.graph
    S = g.check_vertices(S)
    for v, phi in enumerate(inst.demands):
        if phi == 0 or v in S:
            continue
        if phi > len(S) or phi > len(g.adj[v]):
            return False
        if max_independent_paths(g, v, S, limit=phi) < phi:
            return False
    return True


def _partitions4(items):
    """All ordered partitions of ``items`` into four labelled blocks."""
    for labels in itertools.product(range(4), repeat=len(items)):
        blocks = ([], [], [], [])
        for x, lab in zip(items, labels):
            blocks[lab].append(x)
        yield tuple(frozenset(b) for b in blocks)


def _packing_in_induced(g: Graph, keep, v, i, A, B) -> bool:
    sub, ids = induced_subgraph(g, keep)
    index = {old: new for new, old in enumerate(ids)}
    sv = index.get(v) if v is not None else None
    if sv is None and i > 0:
        return False
    A2 = frozenset(index[a] for a in A)
    B2 = frozenset(index[b] for b in B if b in index)
    return constrained_packing_exists(PackingQuery(sub, sv, i, A2, B2))


def split_packing_check(g: Graph, sep: Separation, v: int, S: Iterable[int], dv: int) -> bool:
    """Decide ``dv`` v-independent paths from ``v`` to ``S`` through a separation.

    Searches every ``i`` and every partition ``A, B, C, D`` of the boundary
    minus ``v`` for a matching pair of constrained packings on the two
    sides. Exponential in the separation order; meant as a checker.
    """
    sep.validate(g)
    S = _check_source(g, v, S)
    T, U = sep.T, sep.U
    Z = sorted(sep.boundary - {v})
    if v in T and v not in U:
        choices = [dv]
    elif v in U and v not in T:
        choices = [0]
    else:
        choices = range(dv + 1)
    s_t = S - U
    s_u = S & U
    for A, B, C, D in _partitions4(Z):
        for i in choices:
            if not _packing_in_induced(g, T - C, v if v in T else None, i, A, B | s_t):
                continue
            if _packing_in_induced(g, U - D, v if v in U else None, dv - i, B, A | s_u):
                return True
    return False
