"""
Complete graphs and cycle covers
================================

On a complete graph any two tokens can swap, so the question becomes how to
split the vertices into as many cycles as possible, following arcs from each
current color to a vertex that wants it. Every cycle of length L costs L - 1
swaps. Cycles never need more than c vertices, which keeps the integer
program tiny when c is fixed.
"""

from ctswap import (
    Graph,
    Instance,
    build_destination_graph,
    enumerate_type_sequences,
    potential,
    solve_complete,
    solve_optimal_cycle_cover,
)

for c in range(1, 6):
    print(f"c={c}: {len(enumerate_type_sequences(c))} cycle shapes")

f0 = (1, 1, 2, 2, 3, 3, 4)
ft = (2, 3, 1, 4, 1, 2, 3)
inst = Instance.build(7, Graph.complete(7).edges, f0, ft)
d = build_destination_graph(inst)
print("type counts:", d.type_counts())

cover = solve_optimal_cycle_cover(d)
print("cover:", cover.cycles)

sol = solve_complete(inst)
print("OPT =", sol.opt, "= n - |cover| =", inst.n - cover.cardinality)

# The potential drops by exactly one along an optimal sequence.
colors = list(f0)
trace = [potential(colors, ft)]
for u, v in sol.swaps:
    colors[u], colors[v] = colors[v], colors[u]
    trace.append(potential(colors, ft))
print("potential trace:", trace)
