import itertools
import random

import pytest

from vecconn.errors import CapacityError, InputError
from vecconn.flow import verify_solution
from vecconn.hardness import HittingSetInstance, brute_force_hs, is_hitting_set, reduce_hs_to_vc
from vecconn.oracle import brute_force_opt


def small():
    return HittingSetInstance(3, ({0, 1}, {1, 2}), 1)


def test_small_example_counts():
    inst = reduce_hs_to_vc(small())
    assert inst.n == 11 and inst.k == 5 and inst.d == 5
    assert inst.demands == (0, 0, 0) + (5,) * 4 + (2,) * 4
    assert inst.graph.label(0) == "x0"
    assert inst.graph.label(3) == "y1,F0" and inst.graph.label(7) == "y'1,F0"


def test_structure():
    hs = HittingSetInstance(4, ({0, 1}, {2}, {1, 3}), 2)
    inst = reduce_hs_to_vc(hs)
    g, n, reps, m = inst.graph, hs.n, hs.k + 1, hs.m
    ys = range(n, n + reps * m)
    for a, b in itertools.combinations(ys, 2):
        assert g.has_edge(a, b)
    for j, F in enumerate(hs.sets):
        for i in range(reps):
            y = n + j * reps + i
            pendant = n + reps * m + j * reps + i
            assert g.adj[pendant] == frozenset({y})
            assert {u for u in g.adj[y] if u < n} == F
    # x vertices only touch y vertices
    for u in range(n):
        assert all(w in ys for w in g.adj[u])


def test_no_sets():
    inst = reduce_hs_to_vc(HittingSetInstance(3, (), 0))
    assert inst.n == 3 and inst.k == 0 and inst.graph.m == 0
    assert brute_force_opt(inst)[0] == 0


def test_budget_above_set_count_is_rejected():
    with pytest.raises(InputError, match="normalize"):
        HittingSetInstance(3, ({0},), 2)
    with pytest.raises(InputError):
        HittingSetInstance(2, ({0, 5},), 1)


def test_pendants_are_forced():
    # a pendant of demand 2 has one neighbour, so it must be chosen itself
    inst = reduce_hs_to_vc(small())
    opt, S = brute_force_opt(inst)
    pendants = set(range(7, 11))
    assert pendants <= set(S)


def test_brute_force_hs():
    assert brute_force_hs(small()) == (1, (1,))
    assert brute_force_hs(HittingSetInstance(4, ({0}, {3}, {2, 3}), 2)) == (2, (0, 3))
    with pytest.raises(InputError):
        brute_force_hs(HittingSetInstance(2, (frozenset(),), 0))
    with pytest.raises(CapacityError):
        brute_force_hs(HittingSetInstance(30, ({0},), 1), cap=20)
    assert is_hitting_set(small(), [1]) and not is_hitting_set(small(), [0])


def test_yes_no_transfer():
    rng = random.Random(80)
    seen = set()
    for _ in range(60):
        n = rng.randint(1, 3)
        m = rng.randint(1, 2)
        sets = tuple(
            frozenset(rng.sample(range(n), rng.randint(1, n))) for _ in range(m)
        )
        k = rng.randint(0, m)
        hs = HittingSetInstance(n, sets, k)
        inst = reduce_hs_to_vc(hs)
        hs_yes = brute_force_hs(hs)[0] <= k
        found = brute_force_opt(inst, limit=inst.k)
        assert (found is not None) == hs_yes
        if found is not None:
            assert verify_solution(inst, found[1])
        seen.add(hs_yes)
    assert seen == {True, False}
