"""Exact two-color solver for arbitrary graphs.

OPT equals the weight of a minimum-weight perfect matching between the
color-1 tokens of ``f0`` and the color-1 slots of ``ft``, weighted by graph
distance. Each matched pair is then realised by a color shift along a
shortest path, which costs exactly the path length.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .core import (
    Graph,
    Instance,
    Solution,
    SwapSequence,
    TokenPlacement,
    UnsupportedSolverError,
    canonical_edge,
    check_equivalence,
    connected_components,
)


def all_pairs_shortest_paths(g: Graph) -> np.ndarray:
    """Hop distances between all vertex pairs; ``np.inf`` across components."""
    if g.n == 0:
        return np.zeros((0, 0))
    rows = [u for u, v in g.edges] + [v for u, v in g.edges]
    cols = [v for u, v in g.edges] + [u for u, v in g.edges]
    adj = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(g.n, g.n))
    return shortest_path(adj, method="FW", unweighted=True)


def shortest_path_vertices(g: Graph, dist: np.ndarray, source: int, target: int) -> list[int]:
    """A shortest path from ``source`` to ``target``.

    Walks back from the target, always stepping to the smallest-index
    neighbour one hop closer to the source, so the result is deterministic.
    """
    if not np.isfinite(dist[source, target]):
        raise ValueError(f"no path between {source} and {target}")
    path = [target]
    cur = target
    while cur != source:
        want = dist[source, cur] - 1
        cur = next(w for w in g.adjacency[cur] if dist[source, w] == want)
        path.append(cur)
    path.reverse()
    return path


@dataclass(frozen=True)
class BipartiteMatchInput:
    X: tuple[int, ...]  # vertices holding color 1 in f0
    Y: tuple[int, ...]  # vertices wanting color 1 in ft
    weights: np.ndarray  # weights[i, j] = dist(X[i], Y[j])


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]  # (row index, column index)
    total_weight: float


def build_bipartite(inst: Instance, dist: np.ndarray,
                    vertices: list[int] | None = None) -> BipartiteMatchInput:
    if inst.c != 2:
        raise UnsupportedSolverError(f"two-color solver needs c = 2, got c = {inst.c}")
    vs = range(inst.n) if vertices is None else vertices
    X = tuple(v for v in vs if inst.f0[v] == 1)
    Y = tuple(v for v in vs if inst.ft[v] == 1)
    if len(X) != len(Y):
        raise ValueError("color-1 counts differ; instance is infeasible")
    weights = dist[np.ix_(X, Y)] if X else np.zeros((0, 0))
    return BipartiteMatchInput(X, Y, np.asarray(weights, dtype=float))


def min_weight_perfect_matching(b: BipartiteMatchInput | np.ndarray) -> Matching:
    """Exact minimum-weight perfect matching of a square weight matrix."""
    w = b.weights if isinstance(b, BipartiteMatchInput) else np.asarray(b, dtype=float)
    if w.shape[0] != w.shape[1]:
        raise ValueError(f"weight matrix must be square, got {w.shape}")
    if w.size == 0:
        return Matching((), 0.0)
    finite = np.isfinite(w)
    big = (np.abs(w[finite]).sum() + 1.0) * (w.shape[0] + 1)
    rows, cols = linear_sum_assignment(np.where(finite, w, big))
    total = float(w[rows, cols].sum())
    if not np.isfinite(total):
        raise RuntimeError("no finite-weight perfect matching exists")
    return Matching(tuple(zip(rows.tolist(), cols.tolist())), total)


def color_shift_along_path(f: TokenPlacement, path: list[int]) -> SwapSequence:
    """Exchange the differently colored end tokens of ``path`` in ``len(path) - 1`` swaps.

    Every internal vertex ends with its original color. Works left to right:
    the nearest color-1 token is bubbled to the current head, then the scan
    restarts from where that token came from.
    """
    colors = {v: f[v] for v in path}
    if any(x not in (1, 2) for x in colors.values()):
        raise ValueError("color shift needs a two-colored path")
    if colors[path[0]] == colors[path[-1]]:
        raise ValueError("path endpoints carry the same color")
    p = list(path)
    if colors[p[0]] == 1:
        p.reverse()
    swaps = []
    head = 0
    while head < len(p) - 1:
        i = next(j for j in range(head + 1, len(p)) if colors[p[j]] == 1)
        for j in range(i, head, -1):
            a, b = p[j - 1], p[j]
            colors[a], colors[b] = colors[b], colors[a]
            swaps.append(canonical_edge(a, b))
        head = i
    return tuple(swaps)


def _check_pair_resolution(before, after, x, y):
    for v, (a, b) in enumerate(zip(before, after)):
        if v in (x, y):
            assert a != b
        else:
            assert a == b, f"vertex {v} changed while resolving pair ({x}, {y})"


def solve_two_color(inst: Instance, bipartite_out: list | None = None) -> Solution:
    """Optimal swap sequence for a two-color instance on any graph.

    Runs one matching per connected component. Pairs are resolved in
    ascending source order, except that a pair whose target still holds a
    color-1 token waits until that token has left. If ``bipartite_out`` is a
    list, each component's :class:`BipartiteMatchInput` is appended to it.
    """
    if inst.c != 2:
        raise UnsupportedSolverError(f"two-color solver needs c = 2, got c = {inst.c}")
    if not check_equivalence(inst):
        return Solution.infeasible()
    g = inst.graph
    dist = all_pairs_shortest_paths(g)
    current = list(inst.f0.colors)
    swaps: list[tuple[int, int]] = []
    for comp in connected_components(g):
        b = build_bipartite(inst, dist, comp)
        if bipartite_out is not None:
            bipartite_out.append(b)
        m = min_weight_perfect_matching(b)
        pending = sorted((b.X[i], b.Y[j]) for i, j in m.pairs if b.X[i] != b.Y[j])
        while pending:
            k = next(k for k, (x, y) in enumerate(pending) if current[y] == 2)
            x, y = pending.pop(k)
            path = shortest_path_vertices(g, dist, x, y)
            seq = color_shift_along_path(TokenPlacement(tuple(current), 2, False), path)
            before = list(current)
            for u, v in seq:
                current[u], current[v] = current[v], current[u]
            _check_pair_resolution(before, current, x, y)
            swaps.extend(seq)
    assert tuple(current) == inst.ft.colors
    return Solution(len(swaps), tuple(swaps))
