"""
Kernelization
=============

Small pieces hanging off a bounded boundary are characterized by which
partial solutions they can complete. Pieces with the same behaviour are
interchangeable, so a long one can be swapped for a short one.
"""

from vecconn import Graph, Instance, brute_force_opt, compute_signature, enumerate_Y, kernelize

# %%
# A path of five vertices with one demand at its end.
path5 = Instance(Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]), (1, 0, 0, 0, 0), 1, 1)
for y in enumerate_Y(path5):
    print("piece", sorted(y.members), "boundary", y.boundary)

rep = kernelize(path5)
print("kernel:", rep.instance.n, "vertices, demands", rep.instance.demands)
print("opt before/after:", brute_force_opt(path5)[0], brute_force_opt(rep.instance)[0])

# %%
# Signatures compare pieces glued on the same boundary.
chain = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
stub = Graph.from_edges(3, [(0, 1), (1, 2)])
a = compute_signature(chain, [0], (0, 0, 0, 0), 1)
b = compute_signature(stub, [0], (0, 0, 0), 1)
print("chain of 3 equals chain of 2:", a == b, a.digest()[:12])
