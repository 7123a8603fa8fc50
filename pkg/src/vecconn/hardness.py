"""Hitting Set(m) to Vector Connectivity(k) transformation.

For a Hitting Set instance with ``n`` elements, ``m`` sets and budget ``k``
the produced graph has ``2(k+1)m + n`` vertices:

* ``x_u`` per element, demand 0;
* ``y_{i,F}`` for ``i = 1..k+1`` per set, pairwise adjacent (one clique over
  all of them), adjacent to ``x_u`` for ``u in F``, demand ``(k+1)m + 1``;
* ``y'_{i,F}``, a pendant on ``y_{i,F}``, demand 2.

The budget becomes ``(k+1)m + k``. Vertex ids: the ``x`` vertices first,
then all ``y`` vertices (set-major), then all ``y'`` vertices in the same
order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapacityError, InputError
from .graph import Graph, Instance

__all__ = ["HittingSetInstance", "reduce_hs_to_vc", "brute_force_hs", "is_hitting_set"]


@dataclass(frozen=True)
class HittingSetInstance:
    n: int
    sets: tuple[frozenset[int], ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(frozenset(F) for F in self.sets))
        if self.n < 0 or self.k < 0:
            raise InputError("universe size and budget must be non-negative")
        for j, F in enumerate(self.sets):
            bad = [u for u in F if not 0 <= u < self.n]
            if bad:
                raise InputError(f"set {j} contains elements {bad} outside 0..{self.n - 1}")
        if self.k > self.m:
            raise InputError(
                f"budget k={self.k} exceeds the number of sets m={self.m}; "
                f"normalize with k = min(k, m) (any m sets are hit by m elements)"
            )

    @property
    def m(self) -> int:
        return len(self.sets)


def reduce_hs_to_vc(hs: HittingSetInstance) -> Instance:
    n, m, k = hs.n, hs.m, hs.k
    reps = k + 1
    big = reps * m + 1

    def y(j, i):
        return n + j * reps + i

    def y2(j, i):
        return n + reps * m + j * reps + i

    total = n + 2 * reps * m
    edges = []
    labels = [f"x{u}" for u in range(n)]
    labels += [f"y{i + 1},F{j}" for j in range(m) for i in range(reps)]
    labels += [f"y'{i + 1},F{j}" for j in range(m) for i in range(reps)]
    ys = [y(j, i) for j in range(m) for i in range(reps)]
    for j, F in enumerate(hs.sets):
        for i in range(reps):
            edges.append((y(j, i), y2(j, i)))
            edges.extend((u, y(j, i)) for u in sorted(F))
    edges.extend(itertools.combinations(ys, 2))
    demands = [0] * n + [big] * (reps * m) + [2] * (reps * m)
    g = Graph.from_edges(total, edges, labels)
    return Instance(g, tuple(demands), reps * m + k, big)


def is_hitting_set(hs: HittingSetInstance, T) -> bool:
    T = set(T)
    return all(F & T for F in hs.sets)


def brute_force_hs(hs: HittingSetInstance, cap: int = 20) -> tuple[int, tuple[int, ...]]:
    """Minimum hitting set by enumeration in ascending size, lexicographically first."""
    if hs.n > cap:
        raise CapacityError(f"universe of {hs.n} elements exceeds the cap of {cap}")
    if any(not F for F in hs.sets):
        raise InputError("an empty set can never be hit")
    for size in range(hs.n + 1):
        for T in itertools.combinations(range(hs.n), size):
            if is_hitting_set(hs, T):
                return size, T
    raise InputError("no hitting set exists")
