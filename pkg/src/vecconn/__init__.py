"""Vector Connectivity: exact search, approximation, reduction rules and kernelization."""

from .approx import approximate_d, approximate_opt_squared, local_ratio
from .errors import CapacityError, ContractError, InputError, ParseError
from .flow import (
    PackingQuery,
    closest_min_separator,
    constrained_packing_exists,
    is_closest,
    max_independent_paths,
    min_vs_separator,
    split_packing_check,
    verify_solution,
)
from .graph import Graph, Instance, Separation, glue, induced_subgraph, neighborhood
from .hardness import HittingSetInstance, brute_force_hs, reduce_hs_to_vc
from .io import gen_random, parse_hs, parse_instance, serialize_hs, serialize_instance
from .kernel import (
    KernelCaps,
    compute_signature,
    enumerate_Y,
    find_replacement,
    kernelize,
    torso,
)
from .oracle import brute_force_opt, enumerate_X, packing_oracle
from .reduction import exhaust_rule1, exhaust_rule3, region, rule1_applicable, rule2_check

__version__ = "0.1.0"

__all__ = [
    "approximate_d",
    "approximate_opt_squared",
    "local_ratio",
    "CapacityError",
    "ContractError",
    "InputError",
    "ParseError",
    "PackingQuery",
    "closest_min_separator",
    "constrained_packing_exists",
    "is_closest",
    "max_independent_paths",
    "min_vs_separator",
    "split_packing_check",
    "verify_solution",
    "Graph",
    "Instance",
    "Separation",
    "glue",
    "induced_subgraph",
    "neighborhood",
    "HittingSetInstance",
    "brute_force_hs",
    "reduce_hs_to_vc",
    "gen_random",
    "parse_hs",
    "parse_instance",
    "serialize_hs",
    "serialize_instance",
    "KernelCaps",
    "compute_signature",
    "enumerate_Y",
    "find_replacement",
    "kernelize",
    "torso",
    "brute_force_opt",
    "enumerate_X",
    "packing_oracle",
    "exhaust_rule1",
    "exhaust_rule3",
    "region",
    "rule1_applicable",
    "rule2_check",
]
