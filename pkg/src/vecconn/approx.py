"""Local-ratio approximation.

Each round reduces the demands relative to the current partial solution
``S0`` (Rule 3), stops if ``S0`` already satisfies everything, and
otherwise takes a vertex ``v`` of *minimum* nonzero demand together with
the closest cut of size below ``phi(v)`` that separates it from ``S0`` and
from the other vertices of demand at least ``phi(v)``. At most ``phi(v)``
vertices join ``S0`` per round and at most ``opt`` rounds happen, so the
result has at most ``d * opt`` vertices.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import ContractError
from .flow import closest_min_separator, verify_solution
from .graph import Instance
from .reduction import exhaust_rule3

__all__ = [
    "PartialSolutionState",
    "local_ratio",
    "approximate_d",
    "approximate_opt_squared",
]


@dataclass
class PartialSolutionState:
    S0: frozenset[int]
    rounds: int
    demands: tuple[int, ...]
    picks: list[tuple[int, frozenset[int]]] = field(default_factory=list)
    demand_counts: list[int] = field(default_factory=list)


def local_ratio(inst: Instance, seed: frozenset[int] = frozenset()) -> PartialSolutionState:
    """Run the round loop from partial solution ``seed``; returns the final state.

    ``picks`` records each round's ``(v, C)``; ``demand_counts`` the number
    of nonzero-demand vertices right after each Rule 3 exhaustion.
    """
    g = inst.graph
    state = PartialSolutionState(frozenset(seed), 0, inst.demands)
    while True:
        current, _ = exhaust_rule3(inst.with_demands(state.demands), state.S0)
        state.demands = current.demands
        state.demand_counts.append(len(current.demand_vertices))
        if verify_solution(current, state.S0):
            return state
        phi, v = min((p, u) for u, p in enumerate(current.demands) if p > 0)
        sinks = {u for u, p in enumerate(current.demands) if u != v and p >= phi}
        sinks |= state.S0
        cut = closest_min_separator(g, v, sinks).cut
        if len(cut) >= phi:
            raise ContractError(
                f"no cut below demand {phi} around vertex {v} after Rule 3 exhaustion"
            )
        state.picks.append((v, cut))
        state.S0 = state.S0 | cut | {v}
        state.rounds += 1


def approximate_d(inst: Instance) -> frozenset[int]:
    """A solution of size at most ``d * opt``."""
    return local_ratio(inst).S0


def _guess(args):
    inst, guess = args
    seed = frozenset(v for v, p in enumerate(inst.demands) if p > guess)
    capped = tuple(min(p, guess) for p in inst.demands)
    # demands above the guess sit in the seed and are zeroed by Rule 3 anyway
    run = Instance(inst.graph, capped, inst.k, max(guess, max(capped, default=0)))
    return local_ratio(run, seed).S0


def approximate_opt_squared(inst: Instance, threads: int = 1) -> frozenset[int]:
    """A solution of size at most ``opt^2`` without a fixed demand bound.

    Tries every guess ``1..n`` for the optimum, seeding the partial
    solution with all vertices whose demand exceeds the guess, and keeps
    the smallest result (earliest guess on ties).
    """
    if not inst.demand_vertices:
        return frozenset()
    jobs = [(inst, guess) for guess in range(1, inst.n + 1)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_guess, jobs))
    else:
        results = [_guess(job) for job in jobs]
    return min(results, key=len)
