"""Token swapping on complete graphs, parameterised by the number of colors.

On ``K_n`` the optimum is ``n - |C|`` where ``C`` is a cycle cover of the
destination graph (arc ``u -> v`` iff ``f0(u) == ft(v)``) with as many
cycles as possible. Vertices are interchangeable up to their type
``(ft(v), f0(v))``, so the best cover is found by an integer program over
type sequences, one variable per cyclic chain of types with distinct target
colors. The program has at most ``sum_k C(c, k) (k-1)!`` variables and is
solved exactly by depth-first branch and bound.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .core import (
    Instance,
    Solution,
    SwapSequence,
    TokenPlacement,
    UnsupportedSolverError,
    canonical_edge,
    check_equivalence,
)

Type = tuple[int, int]  # (target color, initial color)
TypeSequence = tuple[Type, ...]


@dataclass(frozen=True)
class DestinationGraph:
    f0: tuple[int, ...]
    ft: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.f0)

    def has_arc(self, u: int, v: int) -> bool:
        return self.f0[u] == self.ft[v]

    @property
    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(self.n) if self.has_arc(u, v)]

    def type_of(self, v: int) -> Type:
        return (self.ft[v], self.f0[v])

    def type_counts(self) -> Counter:
        return Counter(self.type_of(v) for v in range(self.n))


@dataclass(frozen=True)
class CycleCover:
    cycles: tuple[tuple[int, ...], ...]

    @property
    def cardinality(self) -> int:
        return len(self.cycles)


def build_destination_graph(inst: Instance) -> DestinationGraph:
    if not inst.graph.is_complete:
        raise UnsupportedSolverError("complete-graph solver needs a complete graph")
    return DestinationGraph(inst.f0.colors, inst.ft.colors)


def _canonical_rotation(seq: TypeSequence) -> TypeSequence:
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


def enumerate_type_sequences(c: int) -> list[TypeSequence]:
    """All cyclic type chains with distinct target colors, one per rotation class."""
    out = set()
    for k in range(1, c + 1):
        for combo in itertools.combinations(range(1, c + 1), k):
            first, rest = combo[0], combo[1:]
            for tail in itertools.permutations(rest):
                cyc = (first,) + tail
                seq = tuple((cyc[i], cyc[(i + 1) % k]) for i in range(k))
                out.add(_canonical_rotation(seq))
    return sorted(out, key=lambda s: (len(s), s))


@dataclass
class CycleCoverILP:
    """maximize sum(x_s) s.t. for each type t: sum over s containing t of x_s = #t.

    Each sequence contains a type at most once, so the constraint matrix is
    0/1. Self-loop types are not part of the program; callers assign them
    directly.
    """

    sequences: list[TypeSequence]
    counts: dict[Type, int]
    nodes_explored: int = field(default=0, init=False)

    @classmethod
    def from_counts(cls, counts: dict[Type, int], c: int) -> CycleCoverILP:
        live = {t: k for t, k in counts.items() if k > 0 and t[0] != t[1]}
        seqs = [s for s in enumerate_type_sequences(c)
                if len(s) > 1 and all(t in live for t in s)]
        return cls(seqs, live)

    def constraint_matrix(self) -> tuple[list[Type], list[list[int]], list[int]]:
        types = sorted(self.counts)
        A = [[int(t in s) for s in self.sequences] for t in types]
        return types, A, [self.counts[t] for t in types]

    def solve(self) -> dict[TypeSequence, int]:
        seqs = self.sequences
        m = len(seqs)
        # types still coverable by sequences i..m-1
        reach: list[set] = [set() for _ in range(m + 1)]
        for i in range(m - 1, -1, -1):
            reach[i] = reach[i + 1] | set(seqs[i])
        remaining = dict(self.counts)
        x = [0] * m
        best_val = -1
        best_x: list[int] | None = None
        self.nodes_explored = 0

        def rec(i: int, left: int, value: int):
            nonlocal best_val, best_x
            self.nodes_explored += 1
            if left == 0:
                if value > best_val:
                    best_val, best_x = value, x[:]
                return
            if i == m:
                return
            if any(k and t not in reach[i] for t, k in remaining.items()):
                return
            # sequences are sorted by length, so later cycles use >= len(seqs[i]) vertices
            if value + left // len(seqs[i]) <= best_val:
                return
            s = seqs[i]
            cap = min(remaining[t] for t in s)
            for v in range(cap, -1, -1):
                for t in s:
                    remaining[t] -= v
                x[i] = v
                rec(i + 1, left - v * len(s), value + v)
                for t in s:
                    remaining[t] += v
            x[i] = 0

        rec(0, sum(remaining.values()), 0)
        if best_x is None:
            raise RuntimeError("cycle-cover program is infeasible; type counts inconsistent")
        return {s: v for s, v in zip(seqs, best_x) if v}


def solve_optimal_cycle_cover(d: DestinationGraph) -> CycleCover:
    """Cycle cover with the maximum number of cycles.

    Every fixed vertex (``f0(v) == ft(v)``) becomes a self-loop; the rest
    is decided by the integer program and materialised by taking vertices of
    each type in ascending index order.
    """
    c = max(d.f0 + d.ft, default=1)
    cycles: list[tuple[int, ...]] = [(v,) for v in range(d.n) if d.f0[v] == d.ft[v]]
    pool: dict[Type, list[int]] = {}
    for v in range(d.n - 1, -1, -1):
        if d.f0[v] != d.ft[v]:
            pool.setdefault(d.type_of(v), []).append(v)
    ilp = CycleCoverILP.from_counts({t: len(vs) for t, vs in pool.items()}, c)
    for seq, times in ilp.solve().items():
        for _ in range(times):
            cycles.append(tuple(pool[t].pop() for t in seq))
    assert not any(pool.values())
    return CycleCover(tuple(cycles))


def resolve_cycle(f: Sequence[int], ft: Sequence[int], cycle: Sequence[int]) -> SwapSequence:
    """Route every token of a destination-graph cycle home in ``len(cycle) - 1`` swaps.

    ``cycle`` lists vertices so that the token on ``cycle[i]`` is wanted at
    ``cycle[i+1]``. The smallest vertex is the pivot and is swapped with its
    current successor until it holds its own token.
    """
    k = len(cycle)
    if len(set(cycle)) != k:
        raise ValueError("cycle repeats a vertex")
    for i in range(k):
        if f[cycle[i]] != ft[cycle[(i + 1) % k]]:
            raise ValueError(f"{cycle[i]} -> {cycle[(i + 1) % k]} is not an arc")
    if k == 1:
        return ()
    p = cycle.index(min(cycle))
    rot = list(cycle[p:]) + list(cycle[:p])
    return tuple(canonical_edge(rot[0], w) for w in rot[1:])


def solve_complete(inst: Instance) -> Solution:
    d = build_destination_graph(inst)
    if not check_equivalence(inst):
        return Solution.infeasible()
    cover = solve_optimal_cycle_cover(d)
    colors = list(inst.f0.colors)
    swaps: list[tuple[int, int]] = []
    for cyc in cover.cycles:
        for u, v in resolve_cycle(colors, inst.ft.colors, cyc):
            colors[u], colors[v] = colors[v], colors[u]
            swaps.append((u, v))
    assert tuple(colors) == inst.ft.colors
    assert len(swaps) == inst.n - cover.cardinality
    return Solution(len(swaps), tuple(swaps))


def potential(f: TokenPlacement | Sequence[int], ft: TokenPlacement | Sequence[int]) -> int:
    """``n`` minus the size of an optimal cycle cover of D(f, ft)."""
    f = tuple(f.colors if isinstance(f, TokenPlacement) else f)
    ft = tuple(ft.colors if isinstance(ft, TokenPlacement) else ft)
    if Counter(f) != Counter(ft):
        raise ValueError("placements hold different color multisets")
    return len(f) - solve_optimal_cycle_cover(DestinationGraph(f, ft)).cardinality
