import random

import pytest

from _corpus import corpus, random_graph
from vecconn.errors import CapacityError, InputError
from vecconn.flow import max_independent_paths, verify_solution
from vecconn.graph import Graph, Instance
from vecconn.oracle import (
    brute_force_opt,
    connected_sets,
    enumerate_X,
    forced_vertices,
    packing_oracle,
)
from vecconn.reduction import exhaust_rule1

TRIANGLE = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


def test_triangle_opt_two():
    assert brute_force_opt(Instance(TRIANGLE, (2, 2, 2), 2, 2)) == (2, (0, 1))


def test_zero_demands_opt_zero():
    assert brute_force_opt(Instance(TRIANGLE, (0, 0, 0), 0, 2)) == (0, ())


def test_capacity_error():
    with pytest.raises(CapacityError):
        brute_force_opt(Instance(Graph.empty(17), (0,) * 17, 0, 0))
    with pytest.raises(CapacityError):
        enumerate_X(Instance(Graph.empty(5), (0,) * 5, 0, 0), cap=4)


def test_limit_returns_none():
    inst = Instance(Graph.empty(3), (1, 1, 1), 2, 1)
    assert brute_force_opt(inst, limit=2) is None
    assert brute_force_opt(inst, limit=3) == (3, (0, 1, 2))


def _plain_opt(inst):
    for size in range(inst.n + 1):
        for mask in range(1 << inst.n):
            S = [u for u in range(inst.n) if mask >> u & 1]
            if len(S) == size and verify_solution(inst, S):
                return size, tuple(S)


def test_forced_pruning_keeps_lexicographic_witness():
    for inst in corpus(21, 150, n_hi=7):
        res = brute_force_opt(inst)
        assert verify_solution(inst, res[1])
        assert res[1] == min(
            tuple(sorted(S)) for S in _all_optima(inst, res[0])
        )
        assert forced_vertices(inst) <= set(res[1])


def _all_optima(inst, size):
    import itertools

    return [S for S in itertools.combinations(range(inst.n), size) if verify_solution(inst, S)]


def test_witness_minimality():
    for inst in corpus(22, 100, n_hi=7):
        size, witness = brute_force_opt(inst)
        assert (size, witness) == _plain_opt(inst)


def test_packing_oracle_edge_cases():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert packing_oracle(g, 0, {2}, 0)
    assert not packing_oracle(g, 0, {2}, 2)
    with pytest.raises(InputError):
        packing_oracle(g, 0, {0}, 1)


def test_packing_oracle_agrees_with_flow():
    rng = random.Random(23)
    for _ in range(300):
        g = random_graph(rng, rng.randint(2, 8), 0.45)
        v = rng.randrange(g.n)
        S = [u for u in range(g.n) if u != v and rng.random() < 0.5]
        r = rng.randint(0, 4)
        assert packing_oracle(g, v, S, r) == (max_independent_paths(g, v, S) >= r)


def test_connected_sets_complete_and_unique():
    rng = random.Random(24)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 7), 0.4)
        got = list(connected_sets(g))
        assert len(got) == len(set(got))
        expect = set()
        for mask in range(1, 1 << g.n):
            members = [u for u in range(g.n) if mask >> u & 1]
            seen = {members[0]}
            stack = [members[0]]
            while stack:
                u = stack.pop()
                for w in g.adj[u]:
                    if mask >> w & 1 and w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) == len(members):
                expect.add(mask)
        assert set(got) == expect


def test_X_family_examples():
    assert enumerate_X(Instance(TRIANGLE, (0, 0, 0), 0, 1)) == []
    fam = enumerate_X(Instance(Graph.empty(1), (1,), 1, 1))
    assert [X.members for X in fam] == [frozenset({0})]
    assert fam[0].witness == 0 and fam[0].boundary_size == 0


def test_X_family_structure():
    for inst in corpus(25, 80, n_hi=7):
        fam = enumerate_X(inst)
        for X in fam:
            assert inst.demands[X.witness] > X.boundary_size
            assert not any(Y.members < X.members for Y in fam)


def test_hitting_set_equivalence():
    for inst in corpus(26, 100, n_hi=7):
        fam = [X.members for X in enumerate_X(inst)]
        for mask in range(1 << inst.n):
            S = frozenset(u for u in range(inst.n) if mask >> u & 1)
            assert verify_solution(inst, S) == all(S & X for X in fam)


def test_demand_count_inside_X_bounded_for_d2():
    for inst in corpus(27, 150, n_hi=8, d=2):
        reduced, _ = exhaust_rule1(inst)
        for X in enumerate_X(reduced):
            assert len(X.members & reduced.demand_vertices) <= 4
