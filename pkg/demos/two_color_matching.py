"""
Two colors on an arbitrary graph
================================

With two colors the optimum is the weight of a minimum perfect matching
between misplaced tokens and the holes they must fill, measured in graph
distance. Each matched pair is then realised by shifting colors along a
shortest path.
"""

import numpy as np

from ctswap import (
    Graph,
    Instance,
    all_pairs_shortest_paths,
    build_bipartite,
    min_weight_perfect_matching,
    solve_two_color,
    verify_sequence,
)

# A path on eight vertices. Color 1 sits at 3, 4, 7 and must end at 0, 3, 4.
inst = Instance.build(8, Graph.path(8).edges,
                      (2, 2, 2, 1, 1, 2, 2, 1),
                      (1, 2, 2, 1, 1, 2, 2, 2))

dist = all_pairs_shortest_paths(inst.graph)
b = build_bipartite(inst, dist)
print("sources", b.X, "targets", b.Y)
print(b.weights.astype(int))

m = min_weight_perfect_matching(b)
print("matching", m.pairs, "weight", m.total_weight)

sol = solve_two_color(inst)
print("OPT =", sol.opt)
print("swaps:", sol.swaps)
assert verify_sequence(inst, sol.swaps)

# The same solver on a random connected graph
rng = np.random.default_rng(0)
n = 9
edges = {(i, i + 1) for i in range(n - 1)}
while len(edges) < 14:
    u, v = sorted(rng.choice(n, 2, replace=False).tolist())
    edges.add((u, v))
f0 = rng.permutation([1] * 4 + [2] * 5).tolist()
ft = rng.permutation(f0).tolist()
rand = Instance.build(n, sorted(edges), f0, ft)
print("random graph OPT =", solve_two_color(rand).opt)
