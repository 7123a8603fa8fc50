"""
Disjoint paths and closest cuts
===============================

Counting paths from one vertex to a target set that share only their
start, each ending at its own target, and finding the minimum cut that
sits as close to the source as possible.
"""

from vecconn import Graph, closest_min_separator, is_closest, max_independent_paths

# %%
# Vertex 0 fans out to 1 and 2, which both reach the targets 3 and 4.
g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4)])
print("paths 0 -> {3, 4}:", max_independent_paths(g, 0, {3, 4}))

# %%
# A single target absorbs at most one path, however many routes lead to it.
print("paths 0 -> {3}:", max_independent_paths(g, 0, {3}))

# %%
# Both {1, 2} and the targets themselves are minimum cuts. The closest one
# leaves the smallest piece on the source side.
res = closest_min_separator(g, 0, {3, 4})
print("closest cut:", sorted(res.cut), "source side:", sorted(res.component))
print("{1,2} closest?", is_closest(g, 0, {1, 2}), " {3,4} closest?", is_closest(g, 0, {3, 4}))
