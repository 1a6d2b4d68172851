"""Graphs, token placements, swap sequences and instance validation.

Vertices are integers ``0..n-1``; colors are integers ``1..c``.
All objects are immutable once built.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Edge = tuple[int, int]
SwapSequence = tuple[Edge, ...]


class InvalidInstanceError(ValueError):
    """Raised when a graph, placement or instance violates its invariants."""


class InvalidSwapError(ValueError):
    """Raised when a swap is attempted on a pair that is not an edge."""


class UnsupportedSolverError(ValueError):
    """Raised when a solver's structural preconditions do not hold."""


class InfeasibleInstanceError(ValueError):
    """Raised by operations that need a feasible instance (OPT is infinite)."""


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def normalize_sequence(swaps: Iterable[Sequence[int]]) -> SwapSequence:
    return tuple(canonical_edge(int(u), int(v)) for u, v in swaps)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _edge_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInstanceError("vertex count must be nonnegative")
        seen = set()
        edges = []
        for i, e in enumerate(self.edges):
            if len(e) != 2:
                raise InvalidInstanceError(f"edges[{i}]: expected a pair, got {e!r}")
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidInstanceError(f"edges[{i}]: endpoint out of range in {e!r}")
            if u == v:
                raise InvalidInstanceError(f"edges[{i}]: self-loop at vertex {u}")
            ce = canonical_edge(u, v)
            if ce in seen:
                raise InvalidInstanceError(f"edges[{i}]: duplicate edge {ce}")
            seen.add(ce)
            edges.append(ce)
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "edges", tuple(sorted(edges)))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "_edge_set", frozenset(edges))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, tuple((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise InvalidInstanceError("a simple cycle needs at least 3 vertices")
        return cls(n, tuple((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self._edge_set

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    @property
    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    @property
    def is_forest(self) -> bool:
        return len(self.edges) == self.n - len(connected_components(self))

    def subgraph(self, vertices: Sequence[int]) -> tuple[Graph, dict[int, int]]:
        """Induced subgraph relabelled to ``0..k-1``; also returns the old->new map."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = tuple(
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        )
        return Graph(len(vertices), edges), index


@dataclass(frozen=True)
class TokenPlacement:
    """Color of the token on each vertex.

    By default every color in ``1..c`` must be used at least once; pass
    ``surjective=False`` to accept placements that skip a color.
    """

    colors: tuple[int, ...]
    c: int
    surjective: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        colors = tuple(int(x) for x in self.colors)
        object.__setattr__(self, "colors", colors)
        if self.c < 1 and colors:
            raise InvalidInstanceError("color count must be positive")
        for v, x in enumerate(colors):
            if not 1 <= x <= self.c:
                raise InvalidInstanceError(f"[{v}]: color {x} outside 1..{self.c}")
        if self.surjective and colors:
            missing = set(range(1, self.c + 1)) - set(colors)
            if missing:
                raise InvalidInstanceError(
                    f"placement is not surjective: colors {sorted(missing)} unused"
                )

    @classmethod
    def of(cls, colors: Iterable[int], c: int | None = None, surjective: bool = True):
        colors = tuple(colors)
        return cls(colors, c if c is not None else max(colors, default=1), surjective)

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def replace(self, colors: Sequence[int]) -> TokenPlacement:
        return TokenPlacement(tuple(colors), self.c, surjective=False)


@dataclass(frozen=True)
class Instance:
    graph: Graph
    f0: TokenPlacement
    ft: TokenPlacement
    budget: int | None = None

    def __post_init__(self):
        n = self.graph.n
        for name, f in (("f0", self.f0), ("ft", self.ft)):
            if len(f) != n:
                raise InvalidInstanceError(f"{name}: length {len(f)} != vertex count {n}")
        if self.f0.c != self.ft.c:
            raise InvalidInstanceError("f0 and ft use different color counts")
        if self.budget is not None and self.budget < 0:
            raise InvalidInstanceError("budget must be nonnegative")

    @classmethod
    def build(
        cls,
        n: int,
        edges: Iterable[Sequence[int]],
        f0: Sequence[int],
        ft: Sequence[int],
        c: int | None = None,
        budget: int | None = None,
        surjective: bool = True,
    ) -> Instance:
        if c is None:
            c = max(list(f0) + list(ft), default=1)
        placements = []
        for name, colors in (("f0", f0), ("ft", ft)):
            try:
                placements.append(TokenPlacement(tuple(colors), c, surjective))
            except InvalidInstanceError as exc:
                raise InvalidInstanceError(f"{name}{exc}" if str(exc).startswith("[")
                                           else f"{name}: {exc}") from None
        return cls(Graph(n, tuple(tuple(e) for e in edges)), *placements, budget)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def c(self) -> int:
        return self.f0.c

    def restrict(self, vertices: Sequence[int]) -> Instance:
        """Sub-instance induced on ``vertices`` (relabelled in the given order)."""
        g, _ = self.graph.subgraph(vertices)
        return Instance(
            g,
            TokenPlacement(tuple(self.f0[v] for v in vertices), self.c, surjective=False),
            TokenPlacement(tuple(self.ft[v] for v in vertices), self.c, surjective=False),
        )

    def reversed(self) -> Instance:
        return Instance(self.graph, self.ft, self.f0, self.budget)


@dataclass(frozen=True)
class Solution:
    """Outcome of a solver.

    ``opt`` is ``math.inf`` for infeasible instances, in which case ``swaps``
    is None. Value-only solvers also leave ``swaps`` as None.
    """

    opt: float
    swaps: SwapSequence | None = None

    @property
    def feasible(self) -> bool:
        return self.opt != math.inf

    @classmethod
    def infeasible(cls) -> Solution:
        return cls(math.inf, None)


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by least vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def check_equivalence(inst: Instance) -> bool:
    """True iff every component holds the same multiset of colors under f0 and ft."""
    for comp in connected_components(inst.graph):
        balance = [0] * (inst.c + 1)
        for v in comp:
            balance[inst.f0[v]] += 1
            balance[inst.ft[v]] -= 1
        if any(balance):
            return False
    return True


def apply_swap(g: Graph, f: TokenPlacement, e: Sequence[int]) -> TokenPlacement:
    u, v = e
    if not g.has_edge(u, v):
        raise InvalidSwapError(f"({u}, {v}) is not an edge")
    colors = list(f.colors)
    colors[u], colors[v] = colors[v], colors[u]
    return f.replace(colors)


def verify_sequence(inst: Instance, swaps: Iterable[Sequence[int]]) -> bool:
    """Check that ``swaps`` uses only edges and carries f0 exactly to ft."""
    colors = list(inst.f0.colors)
    g = inst.graph
    for e in swaps:
        try:
            u, v = (operator.index(x) for x in e)
        except (TypeError, ValueError):
            return False
        if not g.has_edge(u, v):
            return False
        colors[u], colors[v] = colors[v], colors[u]
    return tuple(colors) == inst.ft.colors


def swap_count_upper_bound(inst: Instance) -> int:
    """``n(n-1)/2``: no two tokens need to be swapped twice in an optimal sequence."""
    if not check_equivalence(inst):
        raise InfeasibleInstanceError("f0 and ft are not equivalent; OPT is infinite")
    return inst.n * (inst.n - 1) // 2


def mismatch_lower_bound(inst: Instance) -> int:
    """Each swap fixes at most two vertices."""
    wrong = sum(a != b for a, b in zip(inst.f0.colors, inst.ft.colors))
    return (wrong + 1) // 2


def replay(g: Graph, f: TokenPlacement, swaps: Iterable[Sequence[int]]) -> TokenPlacement:
    for e in swaps:
        f = apply_swap(g, f, e)
    return f
