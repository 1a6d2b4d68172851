"""Random instance generators and brute-force references shared by the tests.

Nothing here calls into the solvers under test.
"""

from __future__ import annotations

import itertools
import random

from ctswap.core import Graph, Instance, TokenPlacement, connected_components


def surjective_colors(n: int, c: int, rng: random.Random) -> list[int]:
    assert n >= c
    colors = list(range(1, c + 1)) + [rng.randint(1, c) for _ in range(n - c)]
    rng.shuffle(colors)
    return colors


def shuffle_within_components(g: Graph, colors, rng: random.Random) -> list[int]:
    out = list(colors)
    for comp in connected_components(g):
        vals = [out[v] for v in comp]
        rng.shuffle(vals)
        for v, x in zip(comp, vals):
            out[v] = x
    return out


def feasible_instance(g: Graph, c: int, rng: random.Random) -> Instance:
    f0 = surjective_colors(g.n, c, rng)
    ft = shuffle_within_components(g, f0, rng)
    return Instance(g, TokenPlacement(tuple(f0), c), TokenPlacement(tuple(ft), c))


def random_graph(n: int, rng: random.Random, p: float | None = None) -> Graph:
    p = rng.uniform(0.2, 0.8) if p is None else p
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, tuple(edges))


def random_tree(n: int, rng: random.Random) -> Graph:
    order = list(range(n))
    rng.shuffle(order)
    edges = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    return Graph(n, tuple(edges))


def random_forest(n: int, rng: random.Random) -> Graph:
    t = random_tree(n, rng)
    keep = [e for e in t.edges if rng.random() < 0.8]
    return Graph(n, tuple(keep))


def brute_min_matching(w) -> float:
    k = len(w)
    return min(
        (sum(w[i][p[i]] for i in range(k)) for p in itertools.permutations(range(k))),
        default=0,
    )


def brute_max_cycle_cover(f0, ft) -> int:
    """Max number of cycles over all successor maps with f0[u] == ft[succ[u]]."""
    n = len(f0)
    succ = [-1] * n
    used = [False] * n
    best = -1

    def count_cycles():
        seen = [False] * n
        k = 0
        for s in range(n):
            if not seen[s]:
                k += 1
                u = s
                while not seen[u]:
                    seen[u] = True
                    u = succ[u]
        return k

    def rec(u):
        nonlocal best
        if u == n:
            best = max(best, count_cycles())
            return
        for v in range(n):
            if not used[v] and f0[u] == ft[v]:
                used[v] = True
                succ[u] = v
                rec(u + 1)
                used[v] = False

    rec(0)
    return best


def brute_3dm(m: int, triples) -> bool:
    for combo in itertools.combinations(triples, m):
        if all(len({t[d] for t in combo}) == m for d in range(3)):
            return True
    return False


def canonical_surjections(n: int, c: int):
    """Color arrays using all of 1..c, colors numbered by first appearance."""
    def rec(prefix, used):
        if len(prefix) == n:
            if used == c:
                yield tuple(prefix)
            return
        if c - used > n - len(prefix):
            return
        for x in range(1, min(used + 1, c) + 1):
            yield from rec(prefix + [x], max(used, x))

    yield from rec([], 0)


def distinct_arrangements(colors):
    """All distinct permutations of a multiset."""
    counts = {}
    for x in colors:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts)
    n = len(colors)
    out = []

    def rec(prefix):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                prefix.append(k)
                rec(prefix)
                prefix.pop()
                counts[k] += 1

    rec([])
    return out
