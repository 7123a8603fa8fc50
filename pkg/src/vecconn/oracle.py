"""Exhaustive ground truth for small instances.

Nothing in this module touches the flow code: path packings are found by
backtracking over explicit paths, and the exact solver only calls
``verify_solution`` as a black-box feasibility test.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .errors import CapacityError, InputError
from .flow import verify_solution
from .graph import Graph, Instance

__all__ = [
    "DEFAULT_CAP",
    "XSet",
    "brute_force_opt",
    "forced_vertices",
    "enumerate_X",
    "connected_sets",
    "packing_oracle",
    "max_packing_oracle",
    "constrained_packing_oracle",
]

DEFAULT_CAP = 16


def _check_cap(n, cap):
    if n > cap:
        raise CapacityError(f"{n} vertices exceed the exhaustive-search cap of {cap}")


def _induced_paths(adj, start, targets, blocked):
    """Chordless paths from ``start`` whose last vertex is the first target hit.

    Any path can be shortcut along a chord into a chordless one using a
    subset of its vertices, so restricting to these loses no packing.
    """
    path = [start]
    on_path = {start}

    def rec(u):
        for w in sorted(adj[u]):
            if w in on_path or w in blocked:
                continue
            if any(x in adj[w] for x in path[:-1]):
                continue
            if w in targets:
                yield path + [w]
                continue
            path.append(w)
            on_path.add(w)
            yield from rec(w)
            path.pop()
            on_path.discard(w)

    yield from rec(start)


def packing_oracle(g: Graph, v: int, S: Iterable[int], r: int, cap: int = DEFAULT_CAP) -> bool:
    """Are there ``r`` v-independent paths from ``v`` to distinct vertices of ``S``?"""
    _check_cap(g.n, cap)
    S = g.check_vertices(S)
    if v in S:
        raise InputError("v must lie outside S")
    if r <= 0:
        return True
    if r > len(S):
        return False
    return _search_constrained(g.adj, [v] * r, set(S), frozenset([v]), v)


def max_packing_oracle(g: Graph, v: int, S: Iterable[int], cap: int = DEFAULT_CAP) -> int:
    S = g.check_vertices(S)
    r = 0
    while r < len(S) and packing_oracle(g, v, S, r + 1, cap):
        r += 1
    return r


def constrained_packing_oracle(H: Graph, v, i, A, B, C=frozenset(), cap: int = DEFAULT_CAP) -> bool:
    """Backtracking counterpart of ``flow.constrained_packing_exists``.

    One path from each vertex of ``A - B`` and ``i`` paths from ``v``, all
    ending at distinct vertices of ``B``, pairwise disjoint except at ``v``,
    avoiding ``C``; ``v`` never occurs inside a path.
    """
    _check_cap(H.n, cap)
    A, B, C = H.check_vertices(A), H.check_vertices(B), H.check_vertices(C)
    if v is None and i > 0:
        raise InputError("a packing with i > 0 needs a start vertex v")
    zero = A & B
    sources = sorted(A - zero)
    blocked = set(C) | zero | set(sources)
    if v is not None:
        blocked.add(v)
    targets = set(B) - blocked
    starts = list(sources) + [v] * i
    return _search_constrained(H.adj, starts, targets, frozenset(blocked), v)


def _search_constrained(adj, starts, targets, blocked, v, min_end=-1):
    if not starts:
        return True
    start, rest = starts[0], starts[1:]
    # a source may not be blocked by itself
    own = blocked - {start}
    for path in _induced_paths(adj, start, targets, own):
        end = path[-1]
        if start == v and end <= min_end:
            continue
        used = frozenset(path[1:])
        nxt_min = end if start == v else -1
        if _search_constrained(adj, rest, targets - {end}, blocked | used, v, nxt_min):
            return True
    return False


def forced_vertices(inst: Instance) -> frozenset[int]:
    """Vertices whose demand exceeds their degree; every solution contains them."""
    g = inst.graph
    return frozenset(v for v, phi in enumerate(inst.demands) if phi > len(g.adj[v]))


def brute_force_opt(inst: Instance, cap: int = DEFAULT_CAP, limit: int | None = None):
    """Minimum solution by exhaustive search in ascending size.

    Returns ``(size, witness)`` where the witness is the lexicographically
    first optimal set, or ``None`` when no solution of size ``<= limit``
    exists. Only supersets of ``forced_vertices`` are tried; that does not
    change which set is lexicographically first among optimal ones.
    """
    _check_cap(inst.n, cap)
    forced = forced_vertices(inst)
    free = [v for v in range(inst.n) if v not in forced]
    top = inst.n if limit is None else min(limit, inst.n)
    for size in range(len(forced), top + 1):
        for extra in itertools.combinations(free, size - len(forced)):
            S = forced.union(extra)
            if verify_solution(inst, S):
                return size, tuple(sorted(S))
    return None


def connected_sets(g: Graph):
    """Yield every vertex set inducing a connected subgraph, once each, as a bitmask.

    Each set is grown from its minimum vertex; ``banned`` holds vertices
    already branched on at a shallower level so nothing is produced twice.
    """
    masks = g.masks

    def rec(S, ext, banned, allowed):
        yield S
        while ext:
            low = ext & -ext
            ext ^= low
            w = low.bit_length() - 1
            grow = masks[w] & allowed & ~(S | banned | ext | low)
            yield from rec(S | low, ext | grow, banned, allowed)
            banned |= low

    full = (1 << g.n) - 1
    for r in range(g.n):
        allowed = full & ~((1 << (r + 1)) - 1)
        yield from rec(1 << r, masks[r] & allowed, 0, allowed)


def _bits(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class XSet:
    members: frozenset[int]
    witness: int
    boundary_size: int


def enumerate_X(inst: Instance, cap: int = DEFAULT_CAP) -> list[XSet]:
    """Inclusion-minimal connected sets holding a vertex whose demand exceeds ``|N(X)|``."""
    g = inst.graph
    _check_cap(g.n, cap)
    masks = g.masks
    phi = inst.demands
    qualifying = []
    for X in connected_sets(g):
        members = _bits(X)
        top = max(phi[u] for u in members)
        if top == 0:
            continue
        nb = 0
        for u in members:
            nb |= masks[u]
        size = bin(nb & ~X).count("1")
        if top > size:
            qualifying.append((bin(X).count("1"), X, size))
    qualifying.sort()
    minimal = []
    for _, X, size in qualifying:
        if any(Y & X == Y for Y, _ in minimal):
            continue
        minimal.append((X, size))
    family = []
    for X, size in sorted(minimal, key=lambda p: _bits(p[0])):
        members = _bits(X)
        witness = min(u for u in members if phi[u] > size)
        family.append(XSet(frozenset(members), witness, size))
    return family
