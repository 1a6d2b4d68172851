"""
Hardness with three colors
==========================

A 3-dimensional matching instance maps to a bipartite graph of maximum
degree 3 whose token problem can be solved within 3m swaps exactly when a
perfect matching exists. A matching converts directly into a swap sequence.
"""

from ctswap import (
    ThreeDMInstance,
    exact_opt,
    extend_colors,
    find_perfect_matching,
    reduce_3dm,
    star_witness,
    verify_sequence,
)

t = ThreeDMInstance(3, ((1, 1, 3), (3, 2, 1), (1, 1, 2), (3, 3, 2), (2, 2, 1)))
inst = reduce_3dm(t)
print("vertices", inst.n, "edges", len(inst.graph.edges), "budget", inst.budget)

match = find_perfect_matching(t)
print("perfect matching (triple indices):", match)
witness = star_witness(t, match)
print("witness of length", len(witness), "valid:", verify_sequence(inst, witness))

print("exact optimum:", exact_opt(inst).opt)

# Drop a triple so no perfect matching exists: the optimum exceeds 3m.
t2 = ThreeDMInstance(3, t.triples[:4])
print("without the last triple:", find_perfect_matching(t2), exact_opt(reduce_3dm(t2)).opt)

# Padding with extra colors leaves the optimum unchanged.
star = ThreeDMInstance(1, ((1, 1, 1),))
for c in (3, 4, 5):
    print(f"c={c}:", exact_opt(extend_colors(reduce_3dm(star), c)).opt)
