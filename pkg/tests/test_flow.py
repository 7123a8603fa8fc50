import itertools
import random

import pytest

from _corpus import is_closest_reference, min_separators, random_graph, reach
from vecconn.errors import InputError
from vecconn.flow import (
    PackingQuery,
    closest_min_separator,
    constrained_packing_exists,
    is_closest,
    max_independent_paths,
    min_vs_separator,
    split_packing_check,
    verify_solution,
)
from vecconn.graph import Graph, Instance, Separation
from vecconn.oracle import constrained_packing_oracle, max_packing_oracle, packing_oracle


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


TRIANGLE = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


def test_separator_on_path():
    res = min_vs_separator(path(3), 0, {2})
    assert res.cut == {1} and res.size == 1


def test_separator_on_triangle():
    res = min_vs_separator(TRIANGLE, 0, {1, 2})
    assert res.cut == {1, 2} and res.size == 2


def test_closest_cut_prefers_nearest_vertex():
    # v - a - b - t
    res = closest_min_separator(path(4), 0, {3})
    assert res.cut == {1}
    assert res.component == {0}


def test_cut_equals_sinks_when_sinks_are_the_neighbourhood():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    res = closest_min_separator(star, 0, {1, 2, 3})
    assert res.cut == {1, 2, 3} and res.component == {0}


def test_empty_sink_set_is_degenerate():
    res = closest_min_separator(path(3), 0, set())
    assert res.degenerate and res.size == 0 and res.cut == frozenset()


def test_source_in_sinks_rejected():
    with pytest.raises(InputError):
        max_independent_paths(path(3), 0, {0, 2})


def test_is_closest_examples():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert is_closest(star, 0, {1, 2, 3})
    assert not is_closest(path(3), 0, {2})


def test_separator_matches_exhaustive_minimum():
    rng = random.Random(11)
    for _ in range(200):
        g = random_graph(rng, rng.randint(2, 9), 0.4)
        v = rng.randrange(g.n)
        S = [u for u in range(g.n) if u != v and rng.random() < 0.4] or [(v + 1) % g.n]
        res = closest_min_separator(g, v, S)
        mins = min_separators(g, v, S)
        assert res.size == len(mins[0])
        # the returned cut has the smallest component and that component is unique
        comps = sorted(len(reach(g, v, C)) for C in mins)
        assert len(res.component) == comps[0]
        assert comps.count(comps[0]) == 1


def test_is_closest_matches_reference():
    rng = random.Random(12)
    for _ in range(300):
        g = random_graph(rng, rng.randint(2, 8), 0.45)
        v = rng.randrange(g.n)
        C = [u for u in range(g.n) if u != v and rng.random() < 0.35]
        assert is_closest(g, v, C) == is_closest_reference(g, v, C)


def test_menger_duality_against_backtracking():
    rng = random.Random(13)
    for _ in range(300):
        g = random_graph(rng, rng.randint(2, 9), rng.choice([0.3, 0.5]))
        v = rng.randrange(g.n)
        S = [u for u in range(g.n) if u != v and rng.random() < 0.5]
        assert max_independent_paths(g, v, S) == max_packing_oracle(g, v, S)


def test_path_limit_stops_early():
    g = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
    assert max_independent_paths(g, 0, {1, 2, 3, 4}, limit=2) == 2


def test_packing_all_zero_length():
    q = PackingQuery(path(4), None, 0, frozenset({1, 2}), frozenset({1, 2, 3}))
    assert constrained_packing_exists(q)


def test_packing_star_two_leaves():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert constrained_packing_exists(PackingQuery(star, 0, 2, frozenset(), frozenset({1, 2})))
    assert not constrained_packing_exists(PackingQuery(star, 0, 3, frozenset(), frozenset({1, 2})))


def test_packing_query_validation():
    g = path(3)
    with pytest.raises(InputError):
        PackingQuery(g, None, 1, frozenset(), frozenset({2}))
    with pytest.raises(InputError):
        PackingQuery(g, 0, 1, frozenset({0}), frozenset({2}))
    with pytest.raises(InputError):
        PackingQuery(g, 0, 1, frozenset(), frozenset({0}))
    with pytest.raises(InputError):
        PackingQuery(g, 0, 0, frozenset({1}), frozenset(), frozenset({1}))
    with pytest.raises(InputError):
        PackingQuery(g, 7, 0, frozenset(), frozenset())


def test_start_vertex_is_never_an_inner_vertex():
    # 1 - 0 - 2: the only route from 1 to 2 passes through v = 0
    g = Graph.from_edges(3, [(0, 1), (0, 2)])
    assert not constrained_packing_exists(PackingQuery(g, 0, 0, frozenset({1}), frozenset({2})))
    assert constrained_packing_exists(PackingQuery(g, None, 0, frozenset({1}), frozenset({2})))


def test_packing_matches_backtracking_oracle():
    rng = random.Random(14)
    for _ in range(500):
        n = rng.randint(2, 8)
        g = random_graph(rng, n, rng.choice([0.3, 0.5]))
        role = [rng.choice("vABCx") for _ in range(n)]
        vs = [u for u in range(n) if role[u] == "v"]
        v = vs[0] if vs and rng.random() < 0.8 else None
        A = frozenset(u for u in range(n) if role[u] == "A")
        C = frozenset(u for u in range(n) if role[u] == "C")
        B = frozenset(u for u in range(n) if role[u] == "B" or (role[u] == "A" and rng.random() < 0.3))
        i = rng.randint(0, 3) if v is not None else 0
        q = PackingQuery(g, v, i, A, B, C)
        assert constrained_packing_exists(q) == constrained_packing_oracle(g, v, i, A, B, C)


def test_verify_triangle_and_empty_solution():
    inst = Instance(TRIANGLE, (2, 2, 2), 2, 2)
    assert verify_solution(inst, {0, 1})
    assert not verify_solution(inst, {0})
    assert not verify_solution(Instance(TRIANGLE, (1, 0, 0), 1, 1), set())


def test_verify_matches_packing_oracle():
    rng = random.Random(15)
    for _ in range(300):
        n = rng.randint(1, 8)
        g = random_graph(rng, n, 0.45)
        dem = tuple(rng.randint(0, 3) for _ in range(n))
        inst = Instance(g, dem, 3, 3)
        S = frozenset(u for u in range(n) if rng.random() < 0.4)
        expect = all(
            p == 0 or v in S or packing_oracle(g, v, S, p) for v, p in enumerate(dem)
        )
        assert verify_solution(inst, S) == expect


def test_split_check_degenerate_separation():
    g = path(4)
    sep = Separation(frozenset(range(4)), frozenset())
    assert split_packing_check(g, sep, 0, {3}, 1)
    assert not split_packing_check(g, sep, 0, {3}, 2)


def test_split_check_v_on_t_side():
    # two components: T = {0, 1, 2}, U = {3, 4}, no boundary
    g = Graph.from_edges(5, [(0, 1), (0, 2), (3, 4)])
    sep = Separation(frozenset({0, 1, 2}), frozenset({3, 4}))
    assert split_packing_check(g, sep, 0, {1, 2}, 2)
    assert not split_packing_check(g, sep, 0, {1, 2, 3}, 3)


def test_split_check_with_v_on_boundary():
    g = Graph.from_edges(5, [(0, 1), (0, 2), (2, 3), (3, 4)])
    sep = Separation(frozenset({0, 1, 2}), frozenset({0, 2, 3, 4}))
    assert split_packing_check(g, sep, 0, {1, 4}, 2)
    assert not split_packing_check(g, sep, 0, {1, 4}, 3)


def test_split_check_rejects_invalid_separation():
    with pytest.raises(InputError):
        split_packing_check(path(3), Separation(frozenset({0}), frozenset({2})), 0, {2}, 1)


def _closest_sets(g, v):
    others = [u for u in range(g.n) if u != v]
    for r in range(len(others) + 1):
        for C in itertools.combinations(others, r):
            if is_closest(g, v, C):
                yield frozenset(C)


def test_subsets_of_closest_sets_are_closest():
    rng = random.Random(16)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 6), 0.5)
        v = rng.randrange(g.n)
        for C in _closest_sets(g, v):
            for r in range(len(C)):
                for sub in itertools.combinations(sorted(C), r):
                    assert is_closest(g, v, sub)


def test_path_count_agrees_with_networkx():
    nx = pytest.importorskip("networkx")
    from networkx.algorithms.connectivity import local_node_connectivity

    rng = random.Random(31)
    for _ in range(300):
        n = rng.randint(2, 10)
        g = random_graph(rng, n, rng.choice([0.2, 0.4, 0.6]))
        v = rng.randrange(n)
        S = {u for u in range(n) if u != v and rng.random() < 0.3}
        G = nx.Graph()
        G.add_nodes_from(range(n + 1))
        G.add_edges_from(g.edges())
        G.add_edges_from((s, n) for s in S)
        expect = local_node_connectivity(G, v, n) if S else 0
        assert max_independent_paths(g, v, S) == expect
