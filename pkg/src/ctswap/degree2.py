"""Exact solver for graphs of maximum degree two (disjoint paths and cycles).

A shortest sequence never swaps two tokens of the same color, so within a
color class tokens keep their order along a path and their cyclic order
around a cycle. That leaves one token-to-target matching per path and, per
color class on a cycle, one candidate per cyclic offset. Each candidate is a
permutation of distinct tokens, sorted optimally by adjacent swaps.

Cycle sorting works on the lift of the cycle to the integer line. Token ``i``
has clockwise displacement ``delta_i`` in ``[0, n)``; their sum is ``k*n``.
The ``k`` tokens with the largest ``delta`` travel counter-clockwise instead
(``delta_i - n``). The cost is the number of lifted pairs whose order must
reverse, and bubbling adjacent reversed pairs realises it swap for swap.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .core import (
    Graph,
    Instance,
    Solution,
    UnsupportedSolverError,
    canonical_edge,
    check_equivalence,
    connected_components,
)

PATH, CYCLE = "path", "cycle"


def classify_components(g: Graph) -> list[tuple[list[int], str]]:
    """Each component as (vertices in traversal order, kind).

    Paths start at their smaller-index endpoint; cycles start at their
    smallest vertex and continue to its smaller neighbour.
    """
    if g.max_degree > 2:
        raise UnsupportedSolverError(
            f"degree-2 solver needs maximum degree <= 2, got {g.max_degree}"
        )
    out = []
    for comp in connected_components(g):
        ends = [v for v in comp if g.degree(v) < 2]
        kind = PATH if ends or len(comp) == 1 else CYCLE
        start = ends[0] if ends else comp[0]
        order = [start]
        prev = -1
        cur = start
        while True:
            nxt = [w for w in g.adjacency[cur] if w != prev and w != start]
            if not nxt:
                break
            prev, cur = cur, min(nxt)
            order.append(cur)
        out.append((order, kind))
    return out


def _class_positions(colors: Sequence[int]) -> dict[int, list[int]]:
    pos: dict[int, list[int]] = {}
    for i, x in enumerate(colors):
        pos.setdefault(x, []).append(i)
    return pos


def enumerate_color_matchings(
    f0: Sequence[int], ft: Sequence[int], kind: str
) -> Iterator[tuple[int, ...]]:
    """Candidate permutations ``perm[i] = target position of the token at i``.

    ``f0`` and ``ft`` are the component's colors listed in traversal order.
    """
    src = _class_positions(f0)
    dst = _class_positions(ft)
    if {k: len(v) for k, v in src.items()} != {k: len(v) for k, v in dst.items()}:
        raise ValueError("color counts differ; component is infeasible")
    classes = sorted(src)
    if kind == PATH:
        perm = [0] * len(f0)
        for col in classes:
            for a, b in zip(src[col], dst[col]):
                perm[a] = b
        yield tuple(perm)
        return
    offsets = [range(len(src[col])) for col in classes]
    for choice in itertools.product(*offsets):
        perm = [0] * len(f0)
        for col, s in zip(classes, choice):
            a, b = src[col], dst[col]
            k = len(a)
            for i in range(k):
                perm[a[i]] = b[(i + s) % k]
        yield tuple(perm)


def inversion_count(perm: Sequence[int]) -> int:
    n = len(perm)
    return sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))


def sort_path_permutation(perm: Sequence[int]) -> tuple[int, list[tuple[int, int]]]:
    """Bubble sort; returns (inversion count, position swaps ``(i, i+1)``)."""
    arr = list(perm)
    swaps = []
    changed = True
    while changed:
        changed = False
        for i in range(len(arr) - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                swaps.append((i, i + 1))
                changed = True
    return len(swaps), swaps


def cycle_displacements(perm: Sequence[int]) -> list[int]:
    n = len(perm)
    delta = [(perm[i] - i) % n for i in range(n)]
    k = sum(delta) // n
    # ties at the k-th largest go counter-clockwise from the lower index
    for i in sorted(range(n), key=lambda i: (-delta[i], i))[:k]:
        delta[i] -= n
    return delta


def lifted_crossings(disp: Sequence[int]) -> int:
    """Pairs of lifted tokens (one per period) whose order must reverse."""
    n = len(disp)
    y = [q + disp[q] for q in range(n)]
    total = 0
    for a in range(n):
        for b in range(n):
            # copies b + j*n with j in (lo, hi) start right of a and end left of it
            lo = (a - b) // n
            hi = -((y[b] - y[a]) // n)
            total += max(0, hi - lo - 1)
    return total


def cycle_sort_cost(perm: Sequence[int]) -> int:
    return lifted_crossings(cycle_displacements(perm))


def sort_cycle_permutation(perm: Sequence[int]) -> tuple[int, list[tuple[int, int]]]:
    """Minimum adjacent swaps sorting distinct tokens on a cycle of ``len(perm)``.

    Position swaps are ``(q, (q+1) % n)``.
    """
    n = len(perm)
    if n < 3:
        return sort_path_permutation(perm)
    rem = cycle_displacements(perm)
    swaps = []
    while True:
        for q in range(n):
            r = (q + 1) % n
            if rem[q] - rem[r] >= 2:
                rem[q], rem[r] = rem[r] + 1, rem[q] - 1
                swaps.append((q, r))
                break
        else:
            break
    assert not any(rem)
    return len(swaps), swaps


def solve_degree2(inst: Instance) -> Solution:
    comps = classify_components(inst.graph)
    if not check_equivalence(inst):
        return Solution.infeasible()
    swaps: list[tuple[int, int]] = []
    for order, kind in comps:
        a = [inst.f0[v] for v in order]
        b = [inst.ft[v] for v in order]
        if a == b:
            continue
        if kind == PATH:
            perm = next(enumerate_color_matchings(a, b, PATH))
            _, pos_swaps = sort_path_permutation(perm)
        else:
            best = min(enumerate_color_matchings(a, b, CYCLE), key=cycle_sort_cost)
            _, pos_swaps = sort_cycle_permutation(best)
        swaps.extend(canonical_edge(order[p], order[q]) for p, q in pos_swaps)
    return Solution(len(swaps), tuple(swaps))
