"""
From Hitting Set
================

A Hitting Set instance becomes a Vector Connectivity instance whose answer
is the same. Every set turns into a clique of heavily demanding vertices
and every element into a shared neighbour.
"""

from vecconn import HittingSetInstance, brute_force_hs, brute_force_opt, reduce_hs_to_vc

# %%
hs = HittingSetInstance(3, ({0, 1}, {1, 2}), 1)
inst = reduce_hs_to_vc(hs)
print("vertices", inst.n, "budget", inst.k, "max demand", inst.d)
print("labels:", [inst.graph.label(v) for v in range(inst.n)])

# %%
size, T = brute_force_hs(hs)
opt, S = brute_force_opt(inst)
print("hitting set", T, "of size", size)
print("solution", [inst.graph.label(v) for v in S], "of size", opt)
