"""
Automatic solver choice
=======================

`dispatch` inspects an instance and picks the fastest exact method that
applies. Outside every tractable class it falls back to breadth-first search
when the state space is small, and otherwise reports bounds only.
"""

import json
import random

from ctswap import Graph, Instance, dispatch

rng = random.Random(3)


def shuffled(colors):
    out = list(colors)
    rng.shuffle(out)
    return out


cases = {
    "tree": Instance.build(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)], [1, 1, 2, 2, 2, 1], [2, 1, 1, 2, 1, 2]),
    "cycle, 3 colors": Instance.build(6, Graph.cycle(6).edges, [1, 2, 3, 1, 2, 3], shuffled([1, 2, 3, 1, 2, 3])),
    "K5, 3 colors": Instance.build(5, Graph.complete(5).edges, [1, 2, 3, 3, 1], shuffled([1, 2, 3, 3, 1])),
    "small general": Instance.build(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (1, 4)],
                                    [1, 2, 3, 1, 2, 3], [3, 1, 2, 2, 3, 1], budget=6),
}
for name, inst in cases.items():
    rep = dispatch(inst, emit_sequence=True)
    print(f"{name:16s} -> {rep.algorithm:10s} OPT={rep.opt} verdict={rep.budget_verdict}")

edges = sorted({tuple(sorted(rng.sample(range(30), 2))) for _ in range(60)} | {(i, i + 1) for i in range(29)})
f0 = [1 + i % 3 for i in range(30)]
big = Instance.build(30, edges, f0, shuffled(f0))
print(json.dumps(dispatch(big).to_dict(), indent=1))
