import itertools
import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lndkit.fixtures import F_TEXT, FINAL_VARS, S_FINAL_TEXT
from lndkit.grading import (
    QUINTIC_WEIGHTS,
    SEXTIC_WEIGHTS,
    Weights,
    degree_equation_solutions,
    frobenius,
    homogeneous_components,
    monomial_basis,
    weighted_degree,
)
from lndkit.polycore import Polynomial, VariableSet, parse_polynomial

from oracles import brute_basis, brute_semigroup, random_poly

XYZ = VariableSet("xyz")


def P(text):
    return parse_polynomial(text, XYZ)


def test_weights_parse():
    w = Weights.parse("x=3, y=2,z=1")
    assert dict(w) == {"x": 3, "y": 2, "z": 1}
    for bad in ["x=0", "x=-1", "x", "x=3,x=2", "=3", "x=a"]:
        with pytest.raises(ValueError):
            Weights.parse(bad)


def test_weighted_degree_examples():
    assert weighted_degree(P(F_TEXT), QUINTIC_WEIGHTS) == (9, True)
    assert weighted_degree(P("x + y"), QUINTIC_WEIGHTS) == (3, False)
    S = parse_polynomial(S_FINAL_TEXT, FINAL_VARS)
    assert weighted_degree(S, {"lam": 1, "z": 1, "y": 2, "x": 3, "u": 5}) == (3, True)


def test_weighted_degree_needs_all_variables():
    with pytest.raises(ValueError):
        weighted_degree(P("x"), {"x": 3, "y": 2})


def test_homogeneous_components_examples():
    assert homogeneous_components(P("x + y^2"), QUINTIC_WEIGHTS) == [(3, P("x")), (4, P("y^2"))]
    assert homogeneous_components(P(F_TEXT), QUINTIC_WEIGHTS) == [(9, P(F_TEXT))]
    assert homogeneous_components(P("0"), QUINTIC_WEIGHTS) == []


def test_monomial_basis_examples():
    assert set(monomial_basis(3, QUINTIC_WEIGHTS)) == {(1, 0, 0), (0, 1, 1), (0, 0, 3)}
    assert set(monomial_basis(4, QUINTIC_WEIGHTS)) == {(1, 0, 1), (0, 2, 0), (0, 1, 2), (0, 0, 4)}
    assert len(monomial_basis(9, QUINTIC_WEIGHTS)) == 12
    assert monomial_basis(0, QUINTIC_WEIGHTS) == [(0, 0, 0)]
    assert monomial_basis(-1, QUINTIC_WEIGHTS) == []


@pytest.mark.parametrize("w", [QUINTIC_WEIGHTS, SEXTIC_WEIGHTS, Weights(x=1, y=1, z=1)])
def test_monomial_basis_against_brute_force(w):
    names = list(w)
    for d in range(31):
        got = monomial_basis(d, w)
        assert len(got) == len(set(got))
        assert set(got) == set(brute_basis(d, [w[n] for n in names]))
        assert all(sum(a * w[n] for a, n in zip(e, names)) == d for e in got)


def test_degree_additive_on_homogeneous_products():
    rng = random.Random(3)
    for _ in range(60):
        d1, d2 = rng.randint(0, 8), rng.randint(0, 8)
        f = sum((rng.randint(1, 5) * Polynomial.monomial(XYZ, e) for e in monomial_basis(d1, QUINTIC_WEIGHTS)),
                Polynomial.zero(XYZ))
        g = sum((rng.randint(1, 5) * Polynomial.monomial(XYZ, e) for e in monomial_basis(d2, QUINTIC_WEIGHTS)),
                Polynomial.zero(XYZ))
        assert weighted_degree(f * g, QUINTIC_WEIGHTS) == (d1 + d2, True)


def test_components_sum_back():
    rng = random.Random(8)
    for _ in range(100):
        f = random_poly(rng, XYZ, max_terms=8)
        parts = homogeneous_components(f, QUINTIC_WEIGHTS)
        assert sum((p for _, p in parts), Polynomial.zero(XYZ)) == f
        assert [d for d, _ in parts] == sorted({d for d, _ in parts})


def test_degree_equation_examples():
    assert degree_equation_solutions(3, 4, 7) == [(1, 1)]
    assert degree_equation_solutions(3, 4, 9) == [(3, 0)]
    assert sorted(degree_equation_solutions(2, 3, 6)) == [(0, 2), (3, 0)]
    assert degree_equation_solutions(3, 4, -1) == []


def test_frobenius_examples():
    n, member = frobenius(2, 3)
    assert n == 1 and not member(1) and member(2)
    n, member = frobenius(3, 5)
    assert n == 7 and not member(7) and member(8)
    with pytest.raises(ValueError):
        frobenius(2, 4)


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 12), st.integers(2, 12))
def test_frobenius_against_exhaustive_search(m, n):
    if gcd(m, n) != 1:
        return
    number, member = frobenius(m, n)
    assert number == m * n - m - n
    for t in range(3 * m * n + 1):
        assert member(t) == brute_semigroup(m, n, t)
    assert all(member(number + t) for t in range(1, m * n + 1))


def test_degree_equation_against_enumeration():
    for m, n in itertools.product(range(1, 6), repeat=2):
        for t in range(25):
            want = [(i, j) for i in range(t + 1) for j in range(t + 1) if m * i + n * j == t]
            assert sorted(degree_equation_solutions(m, n, t)) == want
