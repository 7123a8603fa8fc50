"""Safe demand-reduction rules.

* Rule 1 zeroes the demand of ``v`` when ``v`` already has ``phi(v)``
  v-independent paths to other vertices of demand at least ``phi(v)``.
* Rule 2 rejects a Rule-1-reduced instance with more than ``d^2 k``
  vertices of nonzero demand.
* Rule 3 is Rule 1 relative to a partial solution ``S0``: vertices of
  ``S0`` count as sinks, and members of ``S0`` lose their demand outright.

None of the rules changes which vertex sets are solutions (for Rule 3:
which sets extend ``S0`` to a solution).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import ContractError
from .flow import closest_min_separator, max_independent_paths
from .graph import Instance

__all__ = [
    "Region",
    "ReductionTrace",
    "rule1_applicable",
    "exhaust_rule1",
    "is_rule1_reduced",
    "rule2_check",
    "rule3_applicable",
    "exhaust_rule3",
    "region",
]


@dataclass(frozen=True)
class Region:
    v: int
    cut: frozenset[int]
    component: frozenset[int]


@dataclass
class ReductionTrace:
    steps: list[tuple[str, int, int]] = field(default_factory=list)
    demands: tuple[int, ...] = ()
    rejected: bool = False

    def to_dict(self):
        return {
            "steps": [{"rule": r, "vertex": v, "demand_before": b} for r, v, b in self.steps],
            "demands": list(self.demands),
            "rejected": self.rejected,
        }


def _sinks(demands, v, extra=()):
    phi = demands[v]
    out = {u for u, p in enumerate(demands) if u != v and p >= phi}
    out.update(u for u in extra if u != v)
    return out


def rule1_applicable(inst: Instance, v: int) -> bool:
    phi = inst.demands[v]
    if phi == 0:
        return False
    sinks = _sinks(inst.demands, v)
    if len(sinks) < phi:
        return False
    return max_independent_paths(inst.graph, v, sinks, limit=phi) >= phi


def _exhaust(inst, applicable, rule):
    demands = list(inst.demands)
    trace = ReductionTrace()
    while True:
        current = inst.with_demands(demands)
        order = sorted((p, v) for v, p in enumerate(demands) if p > 0)
        for p, v in order:
            if applicable(current, v):
                trace.steps.append((rule, v, p))
                demands[v] = 0
                break
        else:
            break
    trace.demands = tuple(demands)
    return inst.with_demands(demands), trace


def exhaust_rule1(inst: Instance) -> tuple[Instance, ReductionTrace]:
    """Apply Rule 1 until it no longer applies.

    Each step zeroes the first applicable vertex in order of ascending
    demand, then ascending id, and rescans from scratch.
    """
    return _exhaust(inst, rule1_applicable, "rule1")


def is_rule1_reduced(inst: Instance) -> bool:
    return not any(rule1_applicable(inst, v) for v in inst.demand_vertices)


def rule2_check(inst: Instance) -> bool:
    """Return ``True`` (accepted) unless more than ``d^2 k`` vertices carry demand.

    Raises ``ContractError`` if the instance is not Rule-1-reduced.
    """
    if not is_rule1_reduced(inst):
        raise ContractError("Rule 2 needs an instance that is exhaustively reduced by Rule 1")
    return len(inst.demand_vertices) <= inst.d * inst.d * inst.k


def rule3_applicable(inst: Instance, S0: Iterable[int], v: int) -> bool:
    S0 = frozenset(S0)
    phi = inst.demands[v]
    if phi == 0:
        return False
    if v in S0:
        return True
    sinks = _sinks(inst.demands, v, S0)
    if len(sinks) < phi:
        return False
    return max_independent_paths(inst.graph, v, sinks, limit=phi) >= phi


def exhaust_rule3(inst: Instance, S0: Iterable[int]) -> tuple[Instance, ReductionTrace]:
    S0 = frozenset(S0)
    return _exhaust(inst, lambda cur, v: rule3_applicable(cur, S0, v), "rule3")


def region(inst: Instance, v: int) -> Region:
    """``C(v)``, the closest minimum separator from ``v`` to the other vertices of
    demand at least ``phi(v)``, with ``R(v)``, the component of ``v`` behind it.
    """
    phi = inst.demands[v]
    if phi < 1:
        raise ContractError(f"vertex {v} has no demand")
    res = closest_min_separator(inst.graph, v, _sinks(inst.demands, v))
    if res.size >= phi:
        raise ContractError(f"|C({v})| = {res.size} >= demand {phi}: instance is not Rule-1-reduced")
    return Region(v, res.cut, res.component)
