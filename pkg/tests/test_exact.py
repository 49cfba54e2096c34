import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lctforge.errors import InputError
from lctforge.exact import (
    determinant,
    is_negative_definite,
    lp_solve,
    parse_rational,
    render_rational,
    solve_linear,
    to_rational,
)
from oracles import faddeev_leverrier, leibniz_det, vertex_enumeration_lp


def test_lp_minimax_example():
    # variables (t, lam)
    res = lp_solve([1, 0], [([1, -1], ">=", 0), ([1, 1], ">=", 1),
                            ([0, 1], ">=", 0), ([0, 1], "<=", 1)])
    assert res.optimal
    assert res.value == Fraction(1, 2)
    assert res.witness == (Fraction(1, 2), Fraction(1, 2))


def test_lp_boundary_and_infeasible():
    assert lp_solve([1], [([1], ">=", 0)]).value == 0
    assert lp_solve([1], [([1], "<=", -1), ([1], ">=", 0)]).status == "infeasible"


def test_lp_unbounded():
    assert lp_solve([1], [([1], "<=", 3)]).status == "unbounded"


def test_lp_dimension_mismatch():
    with pytest.raises(InputError):
        lp_solve([1, 2], [([1], "<=", 3)])


def _random_bounded_lp(rng, n, m):
    constraints = [([1 if i == j else 0 for j in range(n)], ">=", -5) for i in range(n)]
    constraints.append(([1] * n, "<=", 5 * n))
    for _ in range(m):
        coeffs = [rng.randint(-4, 4) for _ in range(n)]
        constraints.append((coeffs, rng.choice(["<=", ">=", "="]) if rng.random() < 0.2
                            else rng.choice(["<=", ">="]), rng.randint(-6, 6)))
    objective = [rng.randint(-5, 5) for _ in range(n)]
    return objective, constraints


def test_lp_matches_vertex_enumeration():
    rng = random.Random(20261016)
    checked = 0
    for _ in range(120):
        n = rng.randint(1, 3)
        objective, constraints = _random_bounded_lp(rng, n, rng.randint(0, 3))
        sense = rng.choice(["min", "max"])
        ours = lp_solve(objective, constraints, sense=sense)
        status, value = vertex_enumeration_lp(objective, constraints, sense)
        assert ours.status == status
        if status == "optimal":
            checked += 1
            assert ours.value == value
            for coeffs, rel, rhs in constraints:
                lhs = sum(Fraction(c) * x for c, x in zip(coeffs, ours.witness))
                assert {"<=": lhs <= rhs, ">=": lhs >= rhs, "=": lhs == rhs}[rel]
            assert sum(Fraction(c) * x for c, x in zip(objective, ours.witness)) == value
    assert checked > 40


@pytest.mark.parametrize("matrix,expected", [
    ([[-1]], True),
    ([[-1, 1], [1, -1]], False),
    ([[-2, 1], [1, -2]], True),
    ([[1]], False),
])
def test_negative_definite_examples(matrix, expected):
    assert is_negative_definite(matrix) is expected


def test_negative_definite_rejects_nonsymmetric():
    with pytest.raises(InputError):
        is_negative_definite([[-1, 1], [0, -1]])


def _charpoly_negdef(matrix):
    # a real symmetric matrix is negative definite iff every root of
    # det(tI - M) is negative iff every coefficient is strictly positive
    return all(c > 0 for c in faddeev_leverrier(matrix))


def test_negative_definite_matches_charpoly():
    rng = random.Random(7)
    seen = {True: 0, False: 0}
    for _ in range(300):
        n = rng.randint(1, 4)
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            m[i][i] = rng.randint(-6, 1)
            for j in range(i):
                m[i][j] = m[j][i] = rng.randint(-2, 2)
        verdict = is_negative_definite(m)
        assert verdict == _charpoly_negdef(m)
        seen[verdict] += 1
    assert seen[True] > 20 and seen[False] > 20


def test_determinant_and_solve_match_leibniz():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(1, 4)
        a = [[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
        det = leibniz_det(a)
        assert determinant(a) == det
        b = [Fraction(rng.randint(-5, 5)) for _ in range(n)]
        if det:
            x = solve_linear(a, b)
            assert all(sum(a[i][j] * x[j] for j in range(n)) == b[i] for i in range(n))
        else:
            with pytest.raises(ZeroDivisionError):
                solve_linear(a, b)


def test_to_rational_rejects_floats_and_bools():
    with pytest.raises(InputError):
        to_rational(0.5)
    with pytest.raises(InputError):
        to_rational(True)
    assert to_rational("3/6") == Fraction(1, 2)


@pytest.mark.parametrize("bad", ["", "1.5", "1e3", "abc", "1/0"])
def test_parse_rational_rejects(bad):
    with pytest.raises(InputError):
        parse_rational(bad)


@given(st.fractions())
@settings(max_examples=200, deadline=None)
def test_render_parse_round_trip(q):
    text = render_rational(q)
    assert parse_rational(text) == q
    assert ("/" in text) == (q.denominator != 1)
