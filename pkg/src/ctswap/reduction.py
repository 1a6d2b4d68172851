"""Hard-instance generators with certified optima.

``reduce_3dm`` maps a 3-dimensional matching instance to a 3-color token
swapping instance whose optimum is at most ``3m`` exactly when a perfect
matching exists. Vertices are laid out as triples first, then X, Y and Z
elements. Planarity of the input is not checked; hardness only holds for
planar, connected, max-degree-3 incidence graphs, but the equivalence
holds for any input.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Graph, Instance, SwapSequence, TokenPlacement, canonical_edge

Triple = tuple[int, int, int]  # 1-based (x, y, z) indices

# (f0, ft) colors per vertex class
_TRIPLE, _X, _Y, _Z = (1, 1), (2, 1), (3, 2), (1, 3)


@dataclass(frozen=True)
class ThreeDMInstance:
    m: int
    triples: tuple[Triple, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be at least 1")
        ts = tuple(tuple(int(i) for i in t) for t in self.triples)
        for t in ts:
            if len(t) != 3 or not all(1 <= i <= self.m for i in t):
                raise ValueError(f"triple {t} out of range 1..{self.m}")
        if len(set(ts)) != len(ts):
            raise ValueError("duplicate triples")
        object.__setattr__(self, "triples", ts)

    # vertex indices in the reduced graph
    def triple_vertex(self, j: int) -> int:
        return j

    def x_vertex(self, i: int) -> int:
        return len(self.triples) + i - 1

    def y_vertex(self, i: int) -> int:
        return len(self.triples) + self.m + i - 1

    def z_vertex(self, i: int) -> int:
        return len(self.triples) + 2 * self.m + i - 1


@dataclass(frozen=True)
class ReductionCertificate:
    instance: Instance
    budget: int
    matching: tuple[int, ...] | None = None  # indices into the triple list
    witness: SwapSequence | None = None

    def to_dict(self) -> dict:
        return {
            "budget": self.budget,
            "matching": list(self.matching) if self.matching is not None else None,
        }


def reduce_3dm(t: ThreeDMInstance) -> Instance:
    k, m = len(t.triples), t.m
    edges = []
    for j, (x, y, z) in enumerate(t.triples):
        edges += [(j, t.x_vertex(x)), (j, t.y_vertex(y)), (j, t.z_vertex(z))]
    kinds = [_TRIPLE] * k + [_X] * m + [_Y] * m + [_Z] * m
    f0 = tuple(a for a, _ in kinds)
    ft = tuple(b for _, b in kinds)
    return Instance(
        Graph(k + 3 * m, tuple(edges)),
        TokenPlacement(f0, 3),
        TokenPlacement(ft, 3),
        budget=3 * m,
    )


def is_perfect_matching(t: ThreeDMInstance, chosen: Sequence[int]) -> bool:
    if len(chosen) != t.m or len(set(chosen)) != t.m:
        return False
    if not all(0 <= j < len(t.triples) for j in chosen):
        return False
    picked = [t.triples[j] for j in chosen]
    return all(len({tr[d] for tr in picked}) == t.m for d in range(3))


def star_witness(t: ThreeDMInstance, chosen: Sequence[int]) -> SwapSequence:
    """Three swaps per chosen triple: its center trades with the X, then Y, then Z element."""
    if not is_perfect_matching(t, chosen):
        raise ValueError(f"triples {list(chosen)} do not form a perfect matching")
    swaps = []
    for j in chosen:
        x, y, z = t.triples[j]
        for w in (t.x_vertex(x), t.y_vertex(y), t.z_vertex(z)):
            swaps.append(canonical_edge(j, w))
    return tuple(swaps)


def lower_bound_3m(t: ThreeDMInstance) -> int:
    """Every X/Y token moves at least twice and every Z token at least once."""
    return 3 * t.m


def find_perfect_matching(t: ThreeDMInstance) -> tuple[int, ...] | None:
    """Backtracking 3DM decider: covers X elements in order 1..m."""
    by_x: dict[int, list[int]] = {}
    for j, (x, _, _) in enumerate(t.triples):
        by_x.setdefault(x, []).append(j)
    used_y: set[int] = set()
    used_z: set[int] = set()
    chosen: list[int] = []

    def rec(x: int) -> bool:
        if x > t.m:
            return True
        for j in by_x.get(x, ()):
            _, y, z = t.triples[j]
            if y in used_y or z in used_z:
                continue
            used_y.add(y)
            used_z.add(z)
            chosen.append(j)
            if rec(x + 1):
                return True
            chosen.pop()
            used_y.discard(y)
            used_z.discard(z)
        return False

    return tuple(chosen) if rec(1) else None


def certify(t: ThreeDMInstance) -> ReductionCertificate:
    inst = reduce_3dm(t)
    match = find_perfect_matching(t)
    witness = star_witness(t, match) if match is not None else None
    return ReductionCertificate(inst, 3 * t.m, match, witness)


def random_3dm(m: int, n_triples: int, rng: random.Random) -> ThreeDMInstance:
    universe = list(itertools.product(range(1, m + 1), repeat=3))
    k = min(n_triples, len(universe))
    return ThreeDMInstance(m, tuple(rng.sample(universe, k)))


def extend_colors(inst: Instance, target_c: int) -> Instance:
    """Attach a pendant path carrying the fixed colors ``c+1 .. target_c``.

    The path hangs off the smallest vertex of degree two (falling back to
    degree one or zero), so the maximum degree stays at most three.
    """
    c = inst.c
    if target_c < c:
        raise ValueError(f"cannot reduce colors from {c} to {target_c}")
    if target_c == c:
        return inst
    g = inst.graph
    by_degree = {d: [v for v in range(g.n) if g.degree(v) == d] for d in (2, 1, 0)}
    anchor = next((vs[0] for vs in by_degree.values() if vs), None)
    if anchor is None:
        raise ValueError("no vertex of degree at most two to attach the path to")
    extra = list(range(c + 1, target_c + 1))
    new = list(range(g.n, g.n + len(extra)))
    edges = list(g.edges) + [(anchor, new[0])] + list(zip(new, new[1:]))
    return Instance(
        Graph(g.n + len(extra), tuple(edges)),
        TokenPlacement(inst.f0.colors + tuple(extra), target_c),
        TokenPlacement(inst.ft.colors + tuple(extra), target_c),
        inst.budget,
    )


def worst_case_path(n: int) -> Instance:
    """Reversal of distinct colors on a path; needs ``n(n-1)/2`` swaps."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Instance(
        Graph.path(n),
        TokenPlacement(tuple(range(1, n + 1)), n),
        TokenPlacement(tuple(range(n, 0, -1)), n),
        budget=n * (n - 1) // 2,
    )


def three_dm_from_triples(m: int, triples: Iterable[Sequence[int]]) -> ThreeDMInstance:
    return ThreeDMInstance(m, tuple(tuple(t) for t in triples))
