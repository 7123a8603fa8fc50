"""Text formats and random instance generation.

Instance format (ids are 0-based)::

    c optional comment
    p vc <n> <m> <k> <d>
    e <u> <v>          one per edge
    d <v> <phi>        one per vertex of nonzero demand

Hitting Set format (elements are 0-based)::

    p hs <n> <m> <k>
    s <e1> <e2> ...    one per set, in order

Serialization is canonical: header, edges sorted with ``u < v``, demand
lines by vertex, no comments. Parsing errors carry line and column.
"""

from __future__ import annotations

import random
from typing import Sequence

from .errors import (
    DemandBoundError,
    DuplicateEdgeError,
    HeaderError,
    InputError,
    ParseError,
    VertexRangeError,
)
from .graph import Graph, Instance
from .hardness import HittingSetInstance

__all__ = [
    "parse_instance",
    "serialize_instance",
    "parse_hs",
    "serialize_hs",
    "gen_random",
    "MAX_VERTICES",
]

MAX_VERTICES = 1_000_000


def _tokens(line):
    """Split a line into ``(token, column)`` pairs; columns are 1-based."""
    out = []
    col = 0
    for part in line.split():
        col = line.index(part, col)
        out.append((part, col + 1))
        col += len(part)
    return out


def _int(tok, lineno, what, cls=ParseError):
    text, col = tok
    if not (text.isascii() and text.isdigit()):
        raise cls(f"expected a non-negative decimal integer for {what}, got {text!r}", lineno, col)
    return int(text)


def _lines(text):
    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = _tokens(line)
        if not toks or toks[0][0] == "c":
            continue
        yield lineno, toks


def parse_instance(text: str) -> Instance:
    header = None
    edges = {}
    demands = {}
    for lineno, toks in _lines(text):
        kind = toks[0][0]
        if kind == "p":
            if header is not None:
                raise HeaderError("second header line", lineno, toks[0][1])
            if len(toks) != 6 or toks[1][0] != "vc":
                raise HeaderError("header must read 'p vc <n> <m> <k> <d>'", lineno, toks[0][1])
            header = tuple(_int(t, lineno, name, HeaderError) for t, name in zip(toks[2:], "nmkd"))
            if header[0] > MAX_VERTICES:
                raise HeaderError(f"n = {header[0]} exceeds the supported {MAX_VERTICES}", lineno, toks[2][1])
            continue
        if header is None:
            raise HeaderError("data line before the 'p vc' header", lineno, toks[0][1])
        n, _, _, d = header
        if kind == "e":
            if len(toks) != 3:
                raise ParseError("edge line must read 'e <u> <v>'", lineno, toks[0][1])
            u, w = (_int(t, lineno, "vertex id") for t in toks[1:])
            for val, tok in ((u, toks[1]), (w, toks[2])):
                if val >= n:
                    raise VertexRangeError(f"vertex id {val} is not below n = {n}", lineno, tok[1])
            if u == w:
                raise ParseError(f"self-loop at vertex {u}", lineno, toks[1][1])
            key = (min(u, w), max(u, w))
            if key in edges:
                raise DuplicateEdgeError(
                    f"edge {key[0]}-{key[1]} already given on line {edges[key]}", lineno, toks[0][1]
                )
            edges[key] = lineno
        elif kind == "d":
            if len(toks) != 3:
                raise ParseError("demand line must read 'd <v> <phi>'", lineno, toks[0][1])
            v = _int(toks[1], lineno, "vertex id")
            phi = _int(toks[2], lineno, "demand")
            if v >= n:
                raise VertexRangeError(f"vertex id {v} is not below n = {n}", lineno, toks[1][1])
            if phi > d:
                raise DemandBoundError(f"demand {phi} exceeds the bound d = {d}", lineno, toks[2][1])
            if v in demands:
                raise ParseError(f"demand of vertex {v} given twice", lineno, toks[0][1])
            demands[v] = phi
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno, toks[0][1])
    if header is None:
        raise HeaderError("missing 'p vc' header")
    n, m, k, d = header
    if len(edges) != m:
        raise HeaderError(f"header announces {m} edges but {len(edges)} were given")
    g = Graph.from_edges(n, sorted(edges))
    phi = [0] * n
    for v, p in demands.items():
        phi[v] = p
    return Instance(g, tuple(phi), k, d)


def serialize_instance(inst: Instance) -> str:
    g = inst.graph
    lines = [f"p vc {g.n} {g.m} {inst.k} {inst.d}"]
    lines += [f"e {u} {w}" for u, w in g.edges()]
    lines += [f"d {v} {p}" for v, p in enumerate(inst.demands) if p]
    return "\n".join(lines) + "\n"


def parse_hs(text: str) -> HittingSetInstance:
    header = None
    sets = []
    for lineno, toks in _lines(text):
        kind = toks[0][0]
        if kind == "p":
            if header is not None:
                raise HeaderError("second header line", lineno, toks[0][1])
            if len(toks) != 5 or toks[1][0] != "hs":
                raise HeaderError("header must read 'p hs <n> <m> <k>'", lineno, toks[0][1])
            header = tuple(_int(t, lineno, name, HeaderError) for t, name in zip(toks[2:], "nmk"))
            continue
        if header is None:
            raise HeaderError("data line before the 'p hs' header", lineno, toks[0][1])
        if kind != "s":
            raise ParseError(f"unknown line type {kind!r}", lineno, toks[0][1])
        elems = set()
        for tok in toks[1:]:
            e = _int(tok, lineno, "element")
            if e >= header[0]:
                raise VertexRangeError(f"element {e} is not below n = {header[0]}", lineno, tok[1])
            elems.add(e)
        sets.append(frozenset(elems))
    if header is None:
        raise HeaderError("missing 'p hs' header")
    n, m, k = header
    if len(sets) != m:
        raise HeaderError(f"header announces {m} sets but {len(sets)} were given")
    return HittingSetInstance(n, tuple(sets), k)


def serialize_hs(hs: HittingSetInstance) -> str:
    lines = [f"p hs {hs.n} {hs.m} {hs.k}"]
    lines += [" ".join(["s"] + [str(e) for e in sorted(F)]) for F in hs.sets]
    return "\n".join(lines) + "\n"


def gen_random(
    n: int,
    edge_prob: float,
    demand_dist: Sequence[float] | None,
    d: int,
    k: int,
    seed: int,
) -> Instance:
    """Erdos-Renyi graph with independent demands.

    ``demand_dist`` gives relative weights for the demand values ``0..d``
    (uniform when ``None``). The same arguments always give the same instance.
    """
    if n < 0 or d < 0 or k < 0:
        raise InputError("n, d and k must be non-negative")
    if not 0.0 <= edge_prob <= 1.0:
        raise InputError(f"edge probability {edge_prob} is outside [0, 1]")
    weights = [1.0] * (d + 1) if demand_dist is None else [float(w) for w in demand_dist]
    if len(weights) != d + 1 or any(w < 0 for w in weights) or sum(weights) <= 0:
        raise InputError(f"demand distribution needs {d + 1} non-negative weights with positive sum")
    rng = random.Random(seed)
    edges = [(u, w) for u in range(n) for w in range(u + 1, n) if rng.random() < edge_prob]
    demands = tuple(rng.choices(range(d + 1), weights=weights, k=n)) if n else ()
    return Instance(Graph.from_edges(n, edges), demands, k, d)
