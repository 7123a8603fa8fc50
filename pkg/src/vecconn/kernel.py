"""Vertex-linear kernelization for bounded demand.

Pipeline: exhaust Rule 1, apply the ``d^2 k`` rejection test, replace one
boundary piece by a smaller piece with the same signature (Rule 4) and
start over, and finally take the torso on
``W = D + union of N[Y]`` over the family of pieces ``Y``.

A *piece* is a set ``Y`` that induces a connected graph, holds at most
``d^3`` demand vertices, has at most ``d`` neighbours, and whose boundary
``N(Y)`` is the closest minimum separator from some demand vertex of ``Y``
to the demand vertices outside ``Y``.

The signature of a piece ``H`` on ``Y + Z`` lists, for every partial
solution ``S_Y`` of at most ``d^3 + d`` vertices, what ``S_Y`` needs from
the outside (per demand vertex: the boundary triples under which its
demand can be met) and what it offers (the boundary triples, plus the
special triples rooted at a boundary vertex, that it can route).
Boundary vertices are referred to by their position in ``Z``.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ContractError
from .flow import (
    PackingQuery,
    closest_min_separator,
    constrained_packing_exists,
    is_closest,
    max_independent_paths,
)
from .graph import (
    Graph,
    Instance,
    closed_neighborhood,
    component,
    components,
    glue,
    induced_subgraph,
    neighborhood,
)
from .reduction import ReductionTrace, exhaust_rule1, rule2_check

__all__ = [
    "YSet",
    "KernelCaps",
    "Signature",
    "KernelReport",
    "enumerate_Y",
    "is_Y_member",
    "signature_budget",
    "compute_signature",
    "find_replacement",
    "apply_rule4",
    "torso",
    "kernelize",
    "trivial_no_instance",
]


@dataclass(frozen=True)
class YSet:
    members: frozenset[int]
    boundary: tuple[int, ...]
    witness: int


@dataclass(frozen=True)
class KernelCaps:
    """Limits for the replacement search.

    ``full_kernel_d`` is the largest ``d`` for which Rule 4 is attempted at
    all; above it the pipeline still reduces demands and takes the torso.
    ``max_candidates`` bounds the number of candidate pieces tried per
    replacement search.
    """

    max_new_vertices: int = 6
    full_kernel_d: int = 2
    max_candidates: int = 200_000


def signature_budget(d: int) -> int:
    """Largest partial-solution size recorded in a signature."""
    return d ** 3 + d


# ---------------------------------------------------------------------------
# piece family


def is_Y_member(inst: Instance, Y: Iterable[int]) -> YSet | None:
    """Check the four defining conditions directly; return the piece or ``None``."""
    g = inst.graph
    Y = frozenset(Y)
    if not Y:
        return None
    D = inst.demand_vertices
    d = inst.d
    start = min(Y)
    if component(g, start, frozenset(g.vertices) - Y) != Y:
        return None
    if len(Y & D) > d ** 3:
        return None
    Z = neighborhood(g, Y)
    if len(Z) > d:
        return None
    outside = D - Y
    # Z separates every v in Y from D - Y because Y is a component of G - Z
    for v in sorted(Y & D):
        if _boundary_is_closest_min(g, v, Z, outside):
            return YSet(Y, tuple(sorted(Z)), v)
    return None


def _boundary_is_closest_min(g: Graph, v: int, Z: frozenset[int], outside: frozenset[int]) -> bool:
    if len(Z) != max_independent_paths(g, v, outside):
        return False
    return is_closest(g, v, Z)


def enumerate_Y(inst: Instance) -> list[YSet]:
    """All pieces, found by the bounded branching process and then filtered.

    The process roots at each demand vertex ``v`` and keeps disjoint sets
    ``D0`` (demand vertices kept with ``v``) and ``D1`` (demand vertices cut
    off), the closest minimum ``v,D1``-separator ``Z`` and the component
    ``Y`` of ``v`` in ``G - Z``. It branches on the reachable demand vertex
    of lowest id and stops once ``|D0| > d^3``, ``|Z| > d`` or no undecided
    demand vertex is reachable. Leaves give candidates that are re-checked
    against the definition; results are sorted by member list.
    """
    g = inst.graph
    D = inst.demand_vertices
    d = inst.d
    found: dict[tuple[int, ...], YSet] = {}

    def leaf(Y):
        key = tuple(sorted(Y))
        if key not in found:
            y = is_Y_member(inst, Y)
            if y is not None:
                found[key] = y

    def branch(v, D0, D1, Z, Y):
        if len(D0) > d ** 3 or len(Z) > d:
            leaf(Y)
            return
        undecided = sorted((D & Y) - D0 - D1)
        if not undecided:
            leaf(Y)
            return
        p = undecided[0]
        branch(v, D0 | {p}, D1, Z, Y)
        D1p = D1 | {p}
        res = closest_min_separator(g, v, D1p)
        branch(v, D0, D1p, res.cut, res.component)

    for v in sorted(D):
        branch(v, frozenset([v]), frozenset(), frozenset(), component(g, v))
    return [found[key] for key in sorted(found)]


# ---------------------------------------------------------------------------
# signatures


def _triples(positions: Sequence[int]):
    """All ``(A, B, C)`` of pairwise disjoint subsets, as sorted position tuples."""
    for labels in itertools.product(range(4), repeat=len(positions)):
        parts = ([], [], [])
        for pos, lab in zip(positions, labels):
            if lab < 3:
                parts[lab].append(pos)
        yield tuple(tuple(p) for p in parts)


class _Piece:
    """Precomputed view of ``H`` with ``Z`` addressed by position."""

    def __init__(self, H: Graph, Z: Sequence[int], demands: Sequence[int], d: int):
        self.H = H
        self.Z = list(Z)
        self.d = d
        zset = set(self.Z)
        self.Y = [u for u in H.vertices if u not in zset]
        self.D = [u for u in self.Y if demands[u] > 0]
        self.demands = demands
        self.triples = sorted(_triples(range(len(self.Z))))
        self.specials = []
        for zp in range(len(self.Z)):
            rest = [p for p in range(len(self.Z)) if p != zp]
            for A, B, C in _triples(rest):
                for i in range(d + 1):
                    self.specials.append((zp, i, A, B, C))

    def ids(self, positions):
        return frozenset(self.Z[p] for p in positions)

    def packing(self, v, i, A, B, C, S_Y):
        return constrained_packing_exists(
            PackingQuery(self.H, v, i, self.ids(A), self.ids(B) | S_Y, self.ids(C))
        )

    def record(self, S_Y: frozenset[int]):
        req = set()
        for v in self.D:
            if v in S_Y:
                sat = self.triples
            else:
                dv = self.demands[v]
                sat = [t for t in self.triples if self.packing(v, dv, *t, S_Y)]
            req.add(tuple(sat))
        fac = [("c",) + t for t in self.triples if self.packing(None, 0, *t, S_Y)]
        for zp, i, A, B, C in self.specials:
            if self.packing(self.Z[zp], i, A, B, C, S_Y):
                fac.append(("s", zp, i, A, B, C))
        return (len(S_Y), tuple(sorted(req)), tuple(sorted(fac)))

    def layer(self, s: int) -> frozenset:
        return frozenset(self.record(frozenset(c)) for c in itertools.combinations(self.Y, s))


@dataclass(frozen=True)
class Signature:
    """A set of ``(s, requirement, facility)`` records in canonical tuple form.

    ``layers[s]`` holds the records for partial solutions of size ``s``;
    equality of signatures is equality of these sets.
    """

    z_size: int
    layers: tuple[frozenset, ...] = field(repr=False)

    def records(self) -> list:
        return sorted(r for layer in self.layers for r in layer)

    def canonical(self) -> str:
        return json.dumps({"z": self.z_size, "records": self.records()}, separators=(",", ":"))

    def digest(self) -> str:
        return hashlib.sha256(self.canonical().encode()).hexdigest()

    def __len__(self):
        return sum(len(layer) for layer in self.layers)


def _check_piece(H, Z, demands, d):
    Z = list(Z)
    H.check_vertices(Z)
    if len(set(Z)) != len(Z):
        raise ContractError("boundary list has repeated vertices")
    if len(demands) != H.n:
        raise ContractError("demand vector does not cover the piece")
    zset = set(Z)
    dem = [u for u in H.vertices if u not in zset and demands[u] > 0]
    if len(dem) > d ** 3:
        raise ContractError(f"piece has {len(dem)} demand vertices, more than d^3 = {d ** 3}")
    if len(Z) > d:
        raise ContractError(f"boundary of size {len(Z)} exceeds d = {d}")
    if any(demands[u] > d for u in dem):
        raise ContractError("a demand exceeds d")


def compute_signature(H: Graph, Z: Sequence[int], phiY: Sequence[int], d: int) -> Signature:
    """Signature of piece ``H`` (vertex set ``Y + Z``) with boundary list ``Z``.

    ``phiY`` is indexed by the vertices of ``H``; entries for ``Z`` are ignored.
    """
    _check_piece(H, Z, phiY, d)
    piece = _Piece(H, Z, phiY, d)
    top = min(len(piece.Y), signature_budget(d))
    return Signature(len(piece.Z), tuple(piece.layer(s) for s in range(top + 1)))


def _candidates(zgraph: Graph, t: int, d: int):
    """Pieces with boundary ``0..|Z|-1`` and ``t`` fresh vertices, in search order.

    Order: adjacency bitmask ascending over the fresh-fresh and fresh-boundary
    slots, then demand vector ascending.
    """
    zn = zgraph.n
    n = zn + t
    slots = [(u, w) for u, w in itertools.combinations(range(n), 2) if w >= zn]
    base = zgraph.edges()
    cap = d ** 3
    vectors = [
        vec
        for vec in itertools.product(range(d + 1), repeat=t)
        if sum(1 for x in vec if x) <= cap
    ]
    for mask in range(1 << len(slots)):
        edges = base + [slots[j] for j in range(len(slots)) if mask >> j & 1]
        g = Graph.from_edges(n, edges)
        for vec in vectors:
            yield g, (0,) * zn + vec


def find_replacement(
    H: Graph,
    Z: Sequence[int],
    phiY: Sequence[int],
    d: int,
    caps: KernelCaps = KernelCaps(),
):
    """Smallest piece with the same signature and fewer non-boundary vertices.

    Candidates have the boundary at ids ``0..|Z|-1`` followed by fresh
    vertices. Returns ``(graph, demands)`` or ``None``.

    A signature records one layer per partial-solution size up to
    ``min(|Y|, d^3 + d)``, so a match needs at least ``min(|Y|, d^3 + d)``
    fresh vertices. Fresh-vertex counts below that are skipped, and when
    ``|Y| <= d^3 + d`` no smaller piece can match at all.
    """
    _check_piece(H, Z, phiY, d)
    Z = list(Z)
    ny = H.n - len(Z)
    budget = signature_budget(d)
    lo = budget
    hi = min(ny - 1, caps.max_new_vertices)
    if lo > hi:
        return None
    piece = _Piece(H, Z, phiY, d)
    zgraph = Graph.from_edges(
        len(Z), [(i, j) for i, j in itertools.combinations(range(len(Z)), 2) if H.has_edge(Z[i], Z[j])]
    )
    target: dict[int, frozenset] = {}
    tried = 0
    for t in range(lo, hi + 1):
        for g, dem in _candidates(zgraph, t, d):
            tried += 1
            if tried > caps.max_candidates:
                return None
            cand = _Piece(g, range(len(Z)), dem, d)
            ok = True
            for s in range(budget + 1):
                if s not in target:
                    target[s] = piece.layer(s)
                if cand.layer(s) != target[s]:
                    ok = False
                    break
            if ok:
                if compute_signature(g, range(len(Z)), dem, d) != compute_signature(H, Z, phiY, d):
                    raise ContractError("replacement signature failed re-verification")
                return g, dem
    return None


def apply_rule4(inst: Instance, y: YSet, caps: KernelCaps = KernelCaps()):
    """Replace piece ``y`` by a smaller equivalent piece; ``None`` if none is found.

    Returns ``(instance, new_piece_size)``.
    """
    g = inst.graph
    Z = list(y.boundary)
    local, ids = induced_subgraph(g, y.members | set(Z))
    index = {old: new for new, old in enumerate(ids)}
    phi_local = tuple(inst.demands[old] for old in ids)
    found = find_replacement(local, [index[z] for z in Z], phi_local, inst.d, caps)
    if found is None:
        return None
    piece, piece_dem = found
    rest, rest_ids = induced_subgraph(g, frozenset(g.vertices) - y.members)
    rest_index = {old: new for new, old in enumerate(rest_ids)}
    labels = [g.label(u) for u in rest_ids]
    rest = Graph.from_edges(rest.n, rest.edges(), labels)
    glued, remap = glue(rest, piece, [rest_index[z] for z in Z], list(range(len(Z))))
    demands = [inst.demands[u] for u in rest_ids] + [0] * (glued.n - rest.n)
    for u in range(len(Z), piece.n):
        demands[remap[u]] = piece_dem[u]
    new_labels = list(labels) + [f"new{j}" for j in range(glued.n - rest.n)]
    glued = Graph.from_edges(glued.n, glued.edges(), new_labels)
    return Instance(glued, tuple(demands), inst.k, inst.d), piece.n - len(Z)


# ---------------------------------------------------------------------------
# torso and the pipeline


def torso(g: Graph, W: Iterable[int]) -> tuple[Graph, list[int]]:
    """Graph on ``W`` (renumbered ascending) plus shortcuts through ``V - W``.

    Two vertices of ``W`` become adjacent when they are adjacent in ``g`` or
    both border the same component of ``g - W``. Returns the graph and
    ``ids`` with ``ids[new] = old``.
    """
    W = g.check_vertices(W)
    ids = sorted(W)
    index = {old: new for new, old in enumerate(ids)}
    edges = [(index[u], index[w]) for u, w in g.edges() if u in W and w in W]
    for K in components(g, W):
        border = sorted(neighborhood(g, K))
        edges.extend((index[u], index[w]) for u, w in itertools.combinations(border, 2))
    labels = [g.label(u) for u in ids]
    return Graph.from_edges(len(ids), edges, labels), ids


def trivial_no_instance(k: int, d: int) -> Instance:
    """``k + 1`` isolated vertices of demand 1: every solution needs all of them."""
    d = max(d, 1)
    return Instance(Graph.empty(k + 1), (1,) * (k + 1), k, d)


@dataclass
class KernelReport:
    instance: Instance
    W: frozenset[int] = frozenset()
    pieces: list[YSet] = field(default_factory=list)
    replacements: list[tuple[tuple[int, ...], int]] = field(default_factory=list)
    rejected: bool = False
    traces: list[ReductionTrace] = field(default_factory=list)
    ids: list[int] = field(default_factory=list)

    def to_dict(self):
        return {
            "rejected": self.rejected,
            "n_out": self.instance.n,
            "demand_vertices_out": len(self.instance.demand_vertices),
            "torso_set": sorted(self.W),
            "pieces": [
                {"members": sorted(y.members), "boundary": list(y.boundary), "witness": y.witness}
                for y in self.pieces
            ],
            "replacements": [
                {"members": list(m), "new_size": size} for m, size in self.replacements
            ],
            "rule1_steps": sum(len(t.steps) for t in self.traces),
            "kept_ids": list(self.ids),
        }


def kernelize(inst: Instance, caps: KernelCaps = KernelCaps()) -> KernelReport:
    """Run the kernel pipeline; the output instance is a yes-instance iff the input is.

    On rejection the report carries ``trivial_no_instance(k, d)``. Vertex
    ids in ``W`` and the pieces refer to the graph after the last
    replacement; ``ids`` maps output vertices to those ids.
    """
    report = KernelReport(inst)
    current = inst
    while True:
        current, trace = exhaust_rule1(current)
        report.traces.append(trace)
        if not rule2_check(current):
            trace.rejected = True
            report.rejected = True
            report.instance = trivial_no_instance(inst.k, inst.d)
            return report
        if current.d > caps.full_kernel_d:
            break
        applied = False
        for y in enumerate_Y(current):
            out = apply_rule4(current, y, caps)
            if out is not None:
                report.replacements.append((tuple(sorted(y.members)), out[1]))
                current = out[0]
                applied = True
                break
        if not applied:
            break
    pieces = enumerate_Y(current)
    W = set(current.demand_vertices)
    for y in pieces:
        W |= closed_neighborhood(current.graph, y.members)
    tg, ids = torso(current.graph, W)
    report.instance = Instance(tg, tuple(current.demands[u] for u in ids), current.k, current.d)
    report.W = frozenset(W)
    report.pieces = pieces
    report.ids = ids
    return report
