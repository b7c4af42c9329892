import pytest

from fdomlab.distributions import DistributionError
from fdomlab.pathtables import path_tables


def test_invariants_for_all_lengths():
    for l in range(1, 16):
        t = path_tables(l)
        p = 3 * t.k - 1
        for phi in (t.lam, t.mu, t.nu, t.phi0, t.phi1):
            assert all(len(s) == t.k for s in phi.assignment)
            for i in range(1, l):
                span = (phi.assignment[i - 1] | phi.assignment[i]
                        | phi.assignment[i + 1])
                assert len(span) == p
        assert not (t.phi0.assignment[0] & t.phi0.assignment[l])
        assert t.phi1.assignment[0] == t.phi1.assignment[l]


def test_length4_lambda_pattern():
    t = path_tables(4)
    assert t.k == 2
    assert [sorted(s) for s in t.lam.assignment] == \
        [[1, 2], [3, 4], [4, 5], [1, 2], [3, 4]]


def test_length3_mu_alternates_two_colours():
    t = path_tables(3)
    assert t.k == 1
    assert [sorted(s) for s in t.mu.assignment] == [[1], [2], [1], [2]]
    assert t.phi1.assignment[0] == t.phi1.assignment[3]


def test_length5_selection():
    t = path_tables(5)
    assert t.phi0 is t.lam and t.phi1 is t.mu
    assert sorted(t.mu.assignment[0]) == [1, 2] == sorted(t.mu.assignment[5])


def test_rejects_nonpositive_length():
    with pytest.raises(DistributionError):
        path_tables(0)
