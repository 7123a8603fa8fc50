import random

from _corpus import corpus, random_graph
from vecconn.approx import _guess, approximate_d, approximate_opt_squared, local_ratio
from vecconn.flow import verify_solution
from vecconn.graph import Graph, Instance
from vecconn.oracle import brute_force_opt


def _min_extension(inst, S0):
    """Fewest extra vertices that complete ``S0`` to a solution."""
    import itertools

    rest = [u for u in range(inst.n) if u not in S0]
    for size in range(len(rest) + 1):
        for extra in itertools.combinations(rest, size):
            if verify_solution(inst, S0 | set(extra)):
                return size


def test_connected_demand_one_picks_single_vertex():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    inst = Instance(g, (1, 1, 1, 1), 1, 1)
    assert len(approximate_d(inst)) == 1
    assert brute_force_opt(inst)[0] == 1


def test_zero_demands_give_empty_set():
    inst = Instance(Graph.empty(3), (0, 0, 0), 0, 2)
    assert approximate_d(inst) == frozenset()
    assert approximate_opt_squared(inst) == frozenset()


def test_factor_d_and_round_properties():
    for inst in corpus(41, 250, n_hi=9):
        opt = brute_force_opt(inst)[0]
        state = local_ratio(inst)
        S = state.S0
        assert verify_solution(inst, S)
        assert len(S) <= inst.d * opt
        assert state.rounds <= opt
        assert state.rounds == len(state.picks)
        S0 = set()
        for ell, (v, cut) in enumerate(state.picks, start=1):
            assert len(cut) < inst.demands[v] <= inst.d
            S0 |= cut | {v}
            # what remains can still be completed with opt - ell vertices
            assert _min_extension(inst, frozenset(S0)) <= opt - ell
        counts = state.demand_counts
        assert all(a > b for a, b in zip(counts, counts[1:]))


def test_opt_squared_examples():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert len(approximate_opt_squared(Instance(g, (1, 1, 1), 1, 1))) == 1


def test_high_demand_vertex_is_seeded():
    rng = random.Random(42)
    g = random_graph(rng, 7, 0.5)
    dem = (6, 1, 0, 1, 0, 2, 0)
    inst = Instance(g, dem, 3, 6)
    for guess in range(1, 6):
        assert 0 in _guess((inst, guess))


def test_opt_squared_bound():
    for inst in corpus(43, 250, n_hi=9, d_hi=6):
        opt = brute_force_opt(inst)[0]
        S = approximate_opt_squared(inst)
        assert verify_solution(inst, S)
        assert len(S) <= opt * opt


def test_threads_do_not_change_the_result():
    for inst in corpus(44, 5, n_hi=8):
        assert approximate_opt_squared(inst, threads=2) == approximate_opt_squared(inst)
