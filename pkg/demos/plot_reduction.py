"""
Lowering demands
================

A demand that is already guaranteed by other demand vertices can be
dropped. After exhaustive reduction the number of demand vertices is at
most d^2 times the optimum, which gives a quick no-certificate.
"""

from vecconn import Graph, Instance, brute_force_opt, exhaust_rule1, rule2_check

# %%
# A 4-cycle where every vertex asks for two paths.
c4 = Instance(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), (2, 2, 2, 2), 2, 2)
reduced, trace = exhaust_rule1(c4)
print("demands before:", c4.demands, "after:", reduced.demands)
print("steps:", trace.to_dict()["steps"])
print("opt before/after:", brute_force_opt(c4)[0], brute_force_opt(reduced)[0])

# %%
# Five isolated vertices that each need a path cannot be served by k = 1.
lonely = Instance(Graph.empty(5), (1,) * 5, 1, 2)
print("accepted" if rule2_check(exhaust_rule1(lonely)[0]) else "rejected")
