import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ctswap.core import (
    Graph,
    InfeasibleInstanceError,
    Instance,
    InvalidInstanceError,
    InvalidSwapError,
    TokenPlacement,
    apply_swap,
    check_equivalence,
    connected_components,
    swap_count_upper_bound,
    verify_sequence,
)
from ctswap.reduction import ThreeDMInstance, reduce_3dm

from gen import feasible_instance, random_graph

TDM3 = ThreeDMInstance(3, ((1, 1, 3), (3, 2, 1), (1, 1, 2), (3, 3, 2), (2, 2, 1)))
SHIFT8_F0 = (2, 2, 2, 1, 1, 2, 2, 1)
SHIFT8_FT = (1, 2, 2, 1, 1, 2, 2, 2)


def test_components():
    assert connected_components(Graph.path(3)) == [[0, 1, 2]]
    assert connected_components(Graph(3, ())) == [[0], [1], [2]]
    assert connected_components(Graph(4, ((0, 1), (2, 3)))) == [[0, 1], [2, 3]]


@pytest.mark.parametrize("edges, msg", [
    (((0, 0),), "self-loop"),
    (((0, 1), (1, 0)), "duplicate"),
    (((0, 5),), "out of range"),
])
def test_graph_rejects(edges, msg):
    with pytest.raises(InvalidInstanceError, match=msg):
        Graph(3, edges)


def test_edges_are_canonical():
    g = Graph(3, ((2, 1), (1, 0)))
    assert g.edges == ((0, 1), (1, 2))
    assert g.has_edge(2, 1)


def test_placement_surjectivity():
    with pytest.raises(InvalidInstanceError, match="surjective"):
        TokenPlacement((1, 1, 3), 3)
    assert TokenPlacement((1, 1, 3), 3, surjective=False).colors == (1, 1, 3)
    with pytest.raises(InvalidInstanceError):
        TokenPlacement((0, 1), 2)


def test_instance_length_mismatch():
    with pytest.raises(InvalidInstanceError, match="length"):
        Instance(Graph.path(3), TokenPlacement((1, 2), 2), TokenPlacement((1, 2, 2), 2))


def test_equivalence_examples():
    assert check_equivalence(Instance.build(2, [(0, 1)], [1, 2], [2, 1]))
    assert not check_equivalence(Instance.build(2, [], [1, 2], [2, 1]))
    assert check_equivalence(reduce_3dm(TDM3))


def test_apply_swap():
    g = Graph.path(3)
    assert apply_swap(g, TokenPlacement((1, 2, 2), 2), (0, 1)).colors == (2, 1, 2)
    assert apply_swap(g, TokenPlacement((1, 1, 2), 2), (0, 1)).colors == (1, 1, 2)
    with pytest.raises(InvalidSwapError):
        apply_swap(g, TokenPlacement((1, 2, 2), 2), (0, 2))


def test_verify_sequence():
    shift8 = Instance.build(8, Graph.path(8).edges, SHIFT8_F0, SHIFT8_FT)
    seq = [(2, 3), (1, 2), (0, 1), (3, 4), (6, 7), (5, 6), (4, 5)]
    assert verify_sequence(shift8, seq)
    assert not verify_sequence(shift8, seq[:-1])
    same = Instance.build(2, [(0, 1)], [1, 2], [1, 2])
    assert verify_sequence(same, [])
    path = Instance.build(3, [(0, 1), (1, 2)], [1, 2, 1], [1, 2, 1])
    assert not verify_sequence(path, [(0, 2), (0, 2)])
    assert not verify_sequence(path, [(0, 7)])
    assert not verify_sequence(path, ["ab"])


def test_upper_bound():
    assert swap_count_upper_bound(Instance.build(4, Graph.path(4).edges, [1, 2, 3, 4], [4, 3, 2, 1])) == 6
    assert swap_count_upper_bound(Instance.build(1, [], [1], [1])) == 0
    shift8 = Instance.build(8, Graph.path(8).edges, SHIFT8_F0, SHIFT8_FT)
    assert swap_count_upper_bound(shift8) == 28
    with pytest.raises(InfeasibleInstanceError):
        swap_count_upper_bound(Instance.build(2, [], [1, 2], [2, 1]))


@st.composite
def instance_and_walk(draw):
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    n = draw(st.integers(2, 8))
    g = random_graph(n, rng)
    inst = feasible_instance(g, draw(st.integers(1, min(3, n))), rng)
    walk = [rng.choice(g.edges) for _ in range(draw(st.integers(0, 6)))] if g.edges else []
    return inst, walk


@settings(max_examples=60, deadline=None)
@given(instance_and_walk())
def test_swaps_preserve_equivalence_and_are_involutions(data):
    inst, walk = data
    f = inst.f0
    for e in walk:
        back = apply_swap(inst.graph, apply_swap(inst.graph, f, e), e)
        assert back == f
        f = apply_swap(inst.graph, f, e)
        assert check_equivalence(Instance(inst.graph, f, inst.ft))
