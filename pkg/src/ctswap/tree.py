"""Two-color token swapping on trees and forests.

For every edge, ``diff(e)`` counts the color-1 tokens that must cross it;
their sum ``D`` is the optimum. The value needs one traversal. A sequence
of exactly ``D`` swaps is built on request by repeatedly swapping on a
desired edge: an edge oriented toward a color-1 deficit whose tail holds a
color-1 token and whose head holds a color-2 token.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Instance,
    Solution,
    UnsupportedSolverError,
    canonical_edge,
    check_equivalence,
    connected_components,
)


@dataclass(frozen=True)
class EdgeDemand:
    diff: dict[tuple[int, int], int]

    @property
    def total(self) -> int:
        return sum(self.diff.values())


@dataclass
class _RootedForest:
    parent: list[int]  # -1 at roots
    order: list[int]  # preorder over all components


def _root_forest(inst: Instance) -> _RootedForest:
    g = inst.graph
    if not g.is_forest:
        raise UnsupportedSolverError("tree solver needs an acyclic graph")
    parent = [-1] * g.n
    order = []
    for comp in connected_components(g):
        root = comp[0]
        stack = [root]
        seen = {root}
        while stack:
            u = stack.pop()
            order.append(u)
            for w in g.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    parent[w] = u
                    stack.append(w)
    return _RootedForest(parent, order)


def _subtree_surplus(inst: Instance, forest: _RootedForest, colors) -> list[int]:
    """For each vertex, color-1 count in its subtree under ``colors`` minus under ft."""
    surplus = [(colors[v] == 1) - (inst.ft[v] == 1) for v in range(inst.n)]
    for v in reversed(forest.order):
        p = forest.parent[v]
        if p >= 0:
            surplus[p] += surplus[v]
    return surplus


def _check(inst: Instance):
    if inst.c != 2:
        raise UnsupportedSolverError(f"tree solver needs c = 2, got c = {inst.c}")


def compute_diff_values(inst: Instance) -> EdgeDemand:
    _check(inst)
    forest = _root_forest(inst)
    if not check_equivalence(inst):
        raise ValueError("instance is infeasible; diff values are undefined")
    surplus = _subtree_surplus(inst, forest, inst.f0.colors)
    return EdgeDemand({
        canonical_edge(v, forest.parent[v]): abs(surplus[v])
        for v in range(inst.n) if forest.parent[v] >= 0
    })


def solve_tree_two_color(inst: Instance) -> Solution:
    """Optimal swap count without building a sequence."""
    _check(inst)
    _root_forest(inst)
    if not check_equivalence(inst):
        return Solution.infeasible()
    return Solution(compute_diff_values(inst).total)


def construct_tree_sequence(inst: Instance, check_steps: bool = False) -> Solution:
    """Optimal sequence of exactly ``D`` swaps on desired edges.

    With ``check_steps`` the demand is recomputed from scratch after every
    swap and asserted to have dropped by one.
    """
    _check(inst)
    forest = _root_forest(inst)
    if not check_equivalence(inst):
        return Solution.infeasible()
    g = inst.graph
    parent = forest.parent
    colors = list(inst.f0.colors)
    surplus = _subtree_surplus(inst, forest, colors)
    D = sum(abs(surplus[v]) for v in range(inst.n) if parent[v] >= 0)

    def heads(u):
        # out-neighbours of u under the current orientation
        for w in g.adjacency[u]:
            if w == parent[u]:
                if surplus[u] > 0:
                    yield w
            elif surplus[w] < 0:
                yield w

    swaps = []
    while D:
        start = next(u for u in range(inst.n)
                     if colors[u] == 1 and next(heads(u), None) is not None)
        u = start
        while True:
            w = next(heads(u))
            if colors[w] == 2:
                break
            u = w
        # one color-1 token crosses (u, w)
        if parent[u] == w:
            surplus[u] -= 1
        else:
            surplus[w] += 1
        colors[u], colors[w] = colors[w], colors[u]
        swaps.append(canonical_edge(u, w))
        D -= 1
        if check_steps:
            fresh = _subtree_surplus(inst, forest, colors)
            assert fresh == surplus
            assert sum(abs(fresh[v]) for v in range(inst.n) if parent[v] >= 0) == D
    assert tuple(colors) == inst.ft.colors
    return Solution(len(swaps), tuple(swaps))
