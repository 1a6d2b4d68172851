"""Exact OPT by breadth-first search over token placements.

This is the ground truth the polynomial solvers are tested against. It is
exponential and refuses instances whose reachable-state estimate exceeds
``state_cap``.
"""

from __future__ import annotations

import math
from collections import Counter, deque

from .core import Instance, Solution, check_equivalence, connected_components

DEFAULT_STATE_CAP = 5_000_000
STATE_COUNT_SATURATION = 2**63 - 1


class StateCapExceeded(RuntimeError):
    def __init__(self, estimate: int, cap: int):
        super().__init__(f"estimated {estimate} reachable states exceeds cap {cap}")
        self.estimate = estimate
        self.cap = cap


def _multinomial(counts) -> int:
    total = math.factorial(sum(counts))
    for k in counts:
        total //= math.factorial(k)
    return total


def estimate_state_count(inst: Instance) -> int:
    """Product over components of the multinomial of the component's f0 color counts.

    Saturates at ``STATE_COUNT_SATURATION`` (2**63 - 1).
    """
    total = 1
    for comp in connected_components(inst.graph):
        total *= _multinomial(Counter(inst.f0[v] for v in comp).values())
        if total >= STATE_COUNT_SATURATION:
            return STATE_COUNT_SATURATION
    return total


def _bfs(inst: Instance) -> list[tuple[int, int]]:
    start = bytes(inst.f0.colors)
    goal = bytes(inst.ft.colors)
    if start == goal:
        return []
    edges = inst.graph.edges
    parent: dict[bytes, tuple[bytes, tuple[int, int]] | None] = {start: None}
    frontier = deque([start])
    while frontier:
        state = frontier.popleft()
        for u, v in edges:
            a, b = state[u], state[v]
            if a == b:
                continue
            nxt = bytearray(state)
            nxt[u], nxt[v] = b, a
            nxt = bytes(nxt)
            if nxt in parent:
                continue
            parent[nxt] = (state, (u, v))
            if nxt == goal:
                path = []
                cur = nxt
                while parent[cur] is not None:
                    cur, e = parent[cur]
                    path.append(e)
                path.reverse()
                return path
            frontier.append(nxt)
    raise AssertionError("goal unreachable although placements are equivalent")


def exact_opt(inst: Instance, state_cap: int = DEFAULT_STATE_CAP) -> Solution:
    """Minimum number of swaps with one optimal witness sequence.

    Components are searched independently and their sequences concatenated
    in component order.
    """
    if not check_equivalence(inst):
        return Solution.infeasible()
    estimate = estimate_state_count(inst)
    if estimate > state_cap:
        raise StateCapExceeded(estimate, state_cap)
    swaps: list[tuple[int, int]] = []
    for comp in connected_components(inst.graph):
        if all(inst.f0[v] == inst.ft[v] for v in comp):
            continue
        sub = inst.restrict(comp)
        swaps.extend((comp[u], comp[v]) for u, v in _bfs(sub))
    return Solution(len(swaps), tuple(swaps))


def exact_distances(inst: Instance, state_cap: int = DEFAULT_STATE_CAP) -> dict[bytes, int]:
    """Distance from f0 to every reachable placement, keyed by ``bytes(colors)``.

    Intended for connected graphs; used to check many targets against one
    source in exhaustive sweeps.
    """
    estimate = estimate_state_count(inst)
    if estimate > state_cap:
        raise StateCapExceeded(estimate, state_cap)
    start = bytes(inst.f0.colors)
    dist = {start: 0}
    frontier = deque([start])
    edges = inst.graph.edges
    while frontier:
        state = frontier.popleft()
        d = dist[state] + 1
        for u, v in edges:
            a, b = state[u], state[v]
            if a == b:
                continue
            nxt = bytearray(state)
            nxt[u], nxt[v] = b, a
            nxt = bytes(nxt)
            if nxt not in dist:
                dist[nxt] = d
                frontier.append(nxt)
    return dist
