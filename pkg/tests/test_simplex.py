import random
from fractions import Fraction as F

import pytest

from fdomlab.simplex import LPInfeasible, LPUnbounded, simplex_exact


def test_trivial_box():
    res = simplex_exact([F(1), F(1)], [[F(1), F(0)], [F(0), F(1)]], [F(1), F(1)])
    assert res.value == 2
    assert res.x == [F(1), F(1)]


def test_covering_via_negated_rows():
    res = simplex_exact([F(-1), F(-1)], [[F(-1), F(-1)]], [F(-1)])
    assert -res.value == 1


def test_infeasible_and_unbounded():
    with pytest.raises(LPInfeasible):
        simplex_exact([F(1)], [[F(1)]], [F(-1)])
    with pytest.raises(LPUnbounded):
        simplex_exact([F(1)], [[F(-1)]], [F(1)])


def test_beale_cycling_example():
    c = [F(3, 4), F(-150), F(1, 50), F(-6)]
    rows = [[F(1, 4), F(-60), F(-1, 25), F(9)],
            [F(1, 2), F(-90), F(-1, 50), F(3)],
            [F(0), F(0), F(1), F(0)]]
    b = [F(0), F(0), F(1)]
    assert simplex_exact(c, rows, b).value == F(1, 20)


def test_random_lps_carry_optimality_certificates():
    # primal feasibility + dual feasibility + equal objectives is a full
    # optimality proof, so no external oracle is needed
    rng = random.Random(11)
    solved = 0
    for _ in range(120):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[F(rng.randint(-4, 4)) for _ in range(n)] for _ in range(m)]
        b = [F(rng.randint(-3, 6)) for _ in range(m)]
        c = [F(rng.randint(-4, 4)) for _ in range(n)]
        try:
            res = simplex_exact(c, rows, b)
        except (LPInfeasible, LPUnbounded):
            continue
        solved += 1
        assert all(x >= 0 for x in res.x)
        for row, bi in zip(rows, b):
            assert sum(a * x for a, x in zip(row, res.x)) <= bi
        assert all(y >= 0 for y in res.y)
        for j in range(n):
            assert sum(rows[i][j] * res.y[i] for i in range(m)) >= c[j]
        assert sum(ci * xi for ci, xi in zip(c, res.x)) == res.value
        assert sum(bi * yi for bi, yi in zip(b, res.y)) == res.value
    assert solved > 30
