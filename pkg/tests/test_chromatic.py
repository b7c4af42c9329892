import random
from fractions import Fraction as F

import pytest

from fdomlab.chromatic import (check_reduction, chromatic_number,
                               fractional_chromatic, fullness_check,
                               join_check, max_weight_independent_set,
                               maximal_independent_sets, witness_pq_colouring)
from fdomlab.generators import (complete, complete_bipartite, cycle,
                                graph_square, kneser)
from fdomlab.graphs import Graph, mask_to_list


def brute_max_independent(g: Graph) -> int:
    best = 0
    for s in range(1 << g.n):
        if all(not (g.nbr_mask[v] & s) for v in mask_to_list(s)):
            best = max(best, s.bit_count())
    return best


def test_chi_f_classics():
    assert fractional_chromatic(cycle(5)).value == F(5, 2)
    assert fractional_chromatic(complete(4)).value == 4
    assert fractional_chromatic(cycle(7)).value == F(7, 3)
    assert fractional_chromatic(kneser(5, 2)).value == F(5, 2)


def test_chi_f_lower_bounds(corpus7):
    rng = random.Random(13)
    for g in rng.sample(corpus7, 25):
        v = fractional_chromatic(g).value
        alpha = brute_max_independent(g)
        assert v >= F(g.n, alpha)


def test_chi_f_colgen_path_agrees():
    g = cycle(11)
    full = fractional_chromatic(g, enum_cap=25).value
    colgen = fractional_chromatic(g, enum_cap=5).value
    assert full == colgen == F(11, 5)


def test_chi_examples():
    assert chromatic_number(graph_square(cycle(5))).value == 5
    assert chromatic_number(complete_bipartite(3, 3)).value == 2
    assert chromatic_number(cycle(7)).value == 3
    assert chromatic_number(complete(6)).value == 6


def test_chi_witness_is_proper(corpus7):
    rng = random.Random(14)
    for g in rng.sample(corpus7, 25):
        res = chromatic_number(g)
        assert res.exact
        col = res.colouring
        assert len(set(col)) == res.value
        for u, v in g.edges():
            assert col[u] != col[v]


def test_maximal_independent_sets_oracle(corpus7):
    rng = random.Random(15)
    for g in rng.sample(corpus7, 15):
        sets = maximal_independent_sets(g)
        assert max((s.bit_count() for s in sets), default=0) == brute_max_independent(g)
        assert len(set(sets)) == len(sets)


def test_max_weight_independent_set(corpus7):
    rng = random.Random(16)
    for g in rng.sample(corpus7, 10):
        weights = [F(rng.randint(0, 5)) for _ in range(g.n)]
        mask, w = max_weight_independent_set(g, weights)
        assert all(not (g.nbr_mask[v] & mask) for v in mask_to_list(mask))
        assert w == sum(weights[v] for v in mask_to_list(mask))
        best = max(sum(weights[v] for v in mask_to_list(s))
                   for s in maximal_independent_sets(g))
        assert w == best


def test_witness_pq_colouring_ratio():
    res = fractional_chromatic(cycle(5))
    p, q, phi = witness_pq_colouring(cycle(5), res, 3, 1)
    assert p == 3 * q
    g = cycle(5)
    for u, v in g.edges():
        assert not (phi[u] & phi[v])
    assert all(len(s) == q for s in phi)


def test_check_reduction_examples():
    r = check_reduction(cycle(5))
    assert r.chi_f == F(5, 2) and r.fdom_split >= 3 and r.equivalence_holds
    assert r.extension_checked
    r = check_reduction(complete(4))
    assert r.chi_f == 4 and r.fdom_split < 3 and r.equivalence_holds
    r = check_reduction(complete(2))
    assert r.fdom_split == 3 and r.equivalence_holds


def test_fullness_c6():
    rep = fullness_check(cycle(6))
    assert rep.chi_square_lower == rep.chi_square_upper == 3
    assert rep.dom_full and rep.fdom_full


def test_fullness_rejects_irregular():
    with pytest.raises(ValueError):
        fullness_check(complete_bipartite(2, 3))


def test_join_lemma_examples():
    assert join_check(cycle(5), 1).holds
    assert join_check(complete(1), 2).joined_value == 3
    assert join_check(cycle(4), 1).joined_value == 3


def test_join_lemma_random(corpus7_mindeg2):
    rng = random.Random(17)
    for g in rng.sample([g for g in corpus7_mindeg2 if g.n <= 6], 6):
        for t in (1, 2):
            assert join_check(g, t).holds


def brute_max_clique(g: Graph) -> int:
    best = 0
    for s in range(1 << g.n):
        verts = mask_to_list(s)
        if all(g.has_edge(u, v) for i, u in enumerate(verts) for v in verts[i + 1:]):
            best = max(best, len(verts))
    return best


def test_chi_f_between_clique_and_ratio(corpus7):
    rng = random.Random(18)
    for g in rng.sample([g for g in corpus7 if g.n <= 6], 15):
        v = fractional_chromatic(g).value
        assert v >= brute_max_clique(g)
        assert v >= F(g.n, brute_max_independent(g))
