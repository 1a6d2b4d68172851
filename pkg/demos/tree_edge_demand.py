"""
Two colors on a tree
====================

On a tree every edge separates the vertices into two sides. The number of
color-1 tokens that must cross an edge is fixed by the surplus of its
subtree, and summing those demands gives the optimum directly.
"""

from ctswap import Graph, Instance, compute_diff_values, construct_tree_sequence, verify_sequence

# A small caterpillar: spine 0-1-2-3 with leaves 4, 5, 6
edges = [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5), (3, 6)]
inst = Instance.build(7, edges, [1, 1, 2, 2, 1, 2, 2], [2, 2, 1, 2, 2, 1, 1])

demand = compute_diff_values(inst)
for e, d in sorted(demand.diff.items()):
    print(f"edge {e}: {d} crossing(s)")
print("D =", demand.total)

sol = construct_tree_sequence(inst)
print("constructed sequence:", sol.swaps)
assert sol.opt == demand.total and verify_sequence(inst, sol.swaps)

# Long paths stay cheap: no matching, no shortest paths.
n = 2000
f0 = [1] * (n // 2) + [2] * (n // 2)
big = Instance.build(n, Graph.path(n).edges, f0, f0[::-1])
print("path of", n, "vertices, D =", compute_diff_values(big).total)
