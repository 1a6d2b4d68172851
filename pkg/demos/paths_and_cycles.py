"""
Paths and cycles with many colors
=================================

When every vertex has degree at most two, each component is a path or a
cycle. Fixing which token goes to which target turns the problem into
sorting a permutation by adjacent transpositions. On a path that costs the
inversion count; on a cycle some tokens travel the other way round.
"""

from ctswap import (
    Graph,
    Instance,
    enumerate_color_matchings,
    exact_opt,
    solve_degree2,
    sort_cycle_permutation,
    sort_path_permutation,
    worst_case_path,
)

# Reversal is the worst case on a path: every pair must cross once.
for n in range(2, 8):
    print(n, solve_degree2(worst_case_path(n)).opt, n * (n - 1) // 2)

# Sorting on a cycle can beat the path cost by wrapping around.
perm = [5, 1, 2, 3, 4, 0]  # swap the two ends
print("path cost", sort_path_permutation(perm)[0], "cycle cost", sort_cycle_permutation(perm)[0])

# A 3-colored cycle; matchings are parameterised by a rotation per color.
f0 = (1, 2, 3, 1, 2, 3, 1, 2)
ft = (2, 3, 1, 2, 1, 3, 1, 2)
print("candidate matchings:", len(list(enumerate_color_matchings(f0, ft, "cycle"))))
inst = Instance.build(8, Graph.cycle(8).edges, f0, ft)
sol = solve_degree2(inst)
print("OPT =", sol.opt, "oracle =", exact_opt(inst).opt)
