import random

from hypothesis import given, settings
from hypothesis import strategies as st

from fdomlab.badfamily import bad_family_check, bad_family_members
from fdomlab.generators import complete, complete_bipartite, cycle
from fdomlab.graphs import Graph
from fdomlab.iso import (automorphisms, canonical_form, group_closure,
                         is_isomorphic, isomorphism, orbits,
                         spanning_subgraph_embedding)


def permuted(g: Graph, perm: list[int]) -> Graph:
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def test_bad_family_examples():
    assert bad_family_check(cycle(7)) == 3
    assert bad_family_check(cycle(8)) is None
    assert bad_family_check(complete_bipartite(2, 3)) == 2
    assert bad_family_check(cycle(4)) == 1


def test_bad_family_members_pairwise_distinct():
    members = bad_family_members()
    keys = list(members)
    for i in keys:
        for j in keys:
            if i < j:
                assert not is_isomorphic(members[i], members[j])


@given(st.integers(1, 8), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_bad_family_check_isomorphism_invariant(idx, rng):
    g = bad_family_members()[idx]
    perm = list(range(g.n))
    rng.shuffle(perm)
    assert bad_family_check(permuted(g, perm)) == idx


def test_isomorphism_mapping_is_explicit():
    g = cycle(6)
    perm = [3, 5, 1, 0, 2, 4]
    h = permuted(g, perm)
    phi = isomorphism(g, h)
    assert phi is not None
    for u, v in g.edges():
        assert h.has_edge(phi[u], phi[v])


def test_non_isomorphic_same_degrees():
    # C6 vs two triangles: same degree sequence, different graphs
    g = cycle(6)
    h = Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not is_isomorphic(g, h)


def test_canonical_form_agrees_with_isomorphism():
    rng = random.Random(7)
    graphs = [cycle(6), complete(4), complete_bipartite(2, 3),
              Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])]
    for g in graphs:
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(g) == canonical_form(permuted(g, perm))
    forms = {canonical_form(g) for g in graphs}
    assert len(forms) == len(graphs)


def test_automorphisms_of_cycle():
    auts = automorphisms(cycle(5))
    assert len(auts) == 10  # dihedral group


def test_orbits_and_closure():
    rot = tuple((i + 1) % 5 for i in range(5))
    assert orbits(5, [rot]) == [[0, 1, 2, 3, 4]]
    assert len(group_closure(5, [rot])) == 5


def test_spanning_subgraph_embedding():
    host = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    sigma = spanning_subgraph_embedding(cycle(4), host)
    assert sigma is not None
    c4 = cycle(4)
    for u, v in c4.edges():
        assert host.has_edge(sigma[u], sigma[v])
    assert spanning_subgraph_embedding(complete(4), host) is None
