import random

import pytest

from ctswap.core import check_equivalence, verify_sequence
from ctswap.oracle import exact_opt
from ctswap.reduction import (
    ThreeDMInstance,
    certify,
    extend_colors,
    find_perfect_matching,
    lower_bound_3m,
    random_3dm,
    reduce_3dm,
    star_witness,
    worst_case_path,
)

from gen import brute_3dm

TDM3 = ThreeDMInstance(3, ((1, 1, 3), (3, 2, 1), (1, 1, 2), (3, 3, 2), (2, 2, 1)))
STAR = ThreeDMInstance(1, ((1, 1, 1),))


def test_tdm3_structure():
    inst = reduce_3dm(TDM3)
    assert inst.n == 14 and len(inst.graph.edges) == 15 and inst.budget == 9
    assert inst.c == 3 and check_equivalence(inst)


def test_star_structure():
    inst = reduce_3dm(STAR)
    assert inst.graph.edges == ((0, 1), (0, 2), (0, 3)) and inst.budget == 3


def test_no_triples_is_infeasible():
    inst = reduce_3dm(ThreeDMInstance(1, ()))
    assert inst.graph.edges == () and not check_equivalence(inst)
    assert not exact_opt(inst).feasible


def test_structure_random():
    rng = random.Random(0)
    for _ in range(30):
        t = random_3dm(rng.randint(1, 3), rng.randint(1, 8), rng)
        g = reduce_3dm(t).graph
        k = len(t.triples)
        assert all(g.degree(j) == 3 for j in range(k))
        for v in range(k, g.n):
            assert all(u < k for u in g.adjacency[v])  # bipartite
        for i in range(1, t.m + 1):
            assert g.degree(t.x_vertex(i)) == sum(tr[0] == i for tr in t.triples)


def test_star_witness():
    inst = reduce_3dm(STAR)
    seq = star_witness(STAR, [0])
    assert len(seq) == 3 and verify_sequence(inst, seq)
    seq = star_witness(TDM3, [0, 3, 4])
    assert len(seq) == 9 and verify_sequence(reduce_3dm(TDM3), seq)
    with pytest.raises(ValueError):
        star_witness(TDM3, [0, 1, 2])


def test_lower_bound():
    assert lower_bound_3m(TDM3) == 9
    assert lower_bound_3m(STAR) == 3
    assert exact_opt(reduce_3dm(STAR)).opt == 3


def test_decider_matches_brute_force():
    rng = random.Random(1)
    for _ in range(100):
        t = random_3dm(rng.randint(1, 3), rng.randint(0, 9), rng)
        found = find_perfect_matching(t)
        assert (found is not None) == brute_3dm(t.m, t.triples)
        if found is not None:
            assert verify_sequence(reduce_3dm(t), star_witness(t, found))


def test_certificate():
    cert = certify(TDM3)
    assert cert.budget == 9 and cert.matching is not None
    assert len(cert.witness) == 9
    assert cert.to_dict() == {"budget": 9, "matching": list(cert.matching)}


def test_extend_colors():
    base = reduce_3dm(STAR)
    ext = extend_colors(base, 4)
    assert ext.n == 5 and ext.c == 4 and ext.f0[4] == ext.ft[4] == 4
    assert ext.graph.max_degree <= 3
    assert extend_colors(base, 3) is base
    assert exact_opt(extend_colors(base, 5)).opt == exact_opt(base).opt == 3


def test_reversal():
    assert exact_opt(worst_case_path(4)).opt == 6
    assert exact_opt(worst_case_path(2)).opt == 1
    assert exact_opt(worst_case_path(1)).opt == 0


def test_rejects_bad_triples():
    with pytest.raises(ValueError):
        ThreeDMInstance(2, ((1, 2, 3),))
    with pytest.raises(ValueError):
        ThreeDMInstance(2, ((1, 2, 1), (1, 2, 1)))
