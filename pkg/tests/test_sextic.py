import dataclasses
from fractions import Fraction

import pytest

from lndkit.elimination import resultant
from lndkit.fixtures import ORIG_VARS, P_VARS, S_PRINTED_TEXT
from lndkit.grading import SEXTIC_WEIGHTS, monomial_basis, weighted_degree
from lndkit.polycore import Polynomial, VariableSet, format_canonical, parse_polynomial
from lndkit.report import Verdict
from lndkit.sextic import (
    build_sextic_inputs,
    compute_sextic_resultant,
    cross_check_original_resultant,
    forward_substitution,
    inverse_substitution,
    p_properties,
    printed_S_discrepancy,
    rewrite_identities,
    to_final_coordinates,
    verify_final_forms,
    verify_P_properties,
    verify_rewrite_chain,
)

FIX = build_sextic_inputs()
PROPS = ["homogeneous of degree 15", "36 terms", "degree 10 in z", "P in (u, x)", "P(u,x,0,0) = -(x^5+u^3)"]


def Q(text):
    return parse_polynomial(text, P_VARS)


def failing(P):
    return [c.name for c in p_properties(P) if not c.holds]


def test_inputs():
    assert FIX.S_orig.degree_in("lam") == 3
    assert FIX.S_orig.coefficient({"lam": 3}) == 1024
    assert FIX.T_orig.degree_in("lam") == 5
    assert len(FIX.P_golden) == 36


def test_rewrite_chain_holds():
    verdict, checks = verify_rewrite_chain(FIX)
    assert verdict == Verdict.PASS
    assert all(c.holds and c.difference.is_zero() for c in checks)
    assert len(rewrite_identities(FIX)) == 4


def test_printed_S_disagrees_with_rewritten_forms():
    d = printed_S_discrepancy(FIX)
    want = parse_polynomial("2*(-1152*A*lam^2 + (132*A^2 - 10800*B)*lam)", ORIG_VARS)
    assert d == want
    printed = parse_polynomial(S_PRINTED_TEXT, ORIG_VARS)
    # only the lam^2 and lam coefficients differ, by sign
    assert printed.coefficients_in("lam")[3] == FIX.S_orig.coefficients_in("lam")[3]
    assert printed.coefficients_in("lam")[0] == FIX.S_orig.coefficients_in("lam")[0]
    for k in (1, 2):
        assert printed.coefficients_in("lam")[k] == -FIX.S_orig.coefficients_in("lam")[k]


def test_final_forms():
    assert verify_final_forms(FIX)
    assert to_final_coordinates(FIX.S_scaled) == FIX.S_final


def test_final_forms_are_homogeneous():
    w = dict(SEXTIC_WEIGHTS, lam=1)
    assert weighted_degree(FIX.S_final, w) == (3, True)
    assert weighted_degree(FIX.T_final, w) == (5, True)


def test_resultant_is_golden():
    P = compute_sextic_resultant(FIX)
    assert P == FIX.P_golden
    assert P.coefficient({"u": 1, "z": 10}) == 138468423456
    assert P.coefficient({"u": 3}) == -1
    e, c = P.leading_term(SEXTIC_WEIGHTS)
    assert (e, c) == ((10, 0, 0, 1), 138468423456)
    assert format_canonical(P, SEXTIC_WEIGHTS).startswith("138468423456*z^10*u")


def test_resultant_is_deterministic():
    a = compute_sextic_resultant(build_sextic_inputs())
    b = compute_sextic_resultant(build_sextic_inputs())
    assert a == b and format_canonical(a) == format_canonical(b)


def test_properties_pass_on_golden():
    verdict, checks = verify_P_properties(FIX.P_golden)
    assert verdict == Verdict.PASS and [c.name for c in checks] == PROPS


def test_membership_mutant():
    assert failing(FIX.P_golden + Q("y^7*z")) == ["36 terms", "P in (u, x)"]


def _plain_term():
    """A term of P that is not extremal in z and not in P(u,x,0,0)."""
    for e, c in FIX.P_golden.sorted_terms(SEXTIC_WEIGHTS):
        if 0 < e[0] < 10:
            return Polynomial(P_VARS, {e: c})
    raise AssertionError("no such term")


def _absent_term():
    """A degree-15 monomial divisible by x, of z-degree below 10, missing from P."""
    for e in monomial_basis(15, SEXTIC_WEIGHTS, P_VARS):
        if e[2] and e[0] < 10 and (e[1] or e[0]) and e not in FIX.P_golden.terms:
            return Polynomial(P_VARS, {e: 1})
    raise AssertionError("no such monomial")


@pytest.mark.parametrize("prop, mutate", [
    ("homogeneous of degree 15", lambda P: P - _plain_term() + Q("x*z")),
    ("36 terms", lambda P: P + _absent_term()),
    ("degree 10 in z", lambda P: P - _plain_term() + Q("x*z^12")),
    ("P in (u, x)", lambda P: P - _plain_term() + Q("y^7*z")),
    ("P(u,x,0,0) = -(x^5+u^3)", lambda P: P + Q("2*x^5")),
])
def test_mutants_flip_one_property(prop, mutate):
    assert failing(mutate(FIX.P_golden)) == [prop]


def test_cross_check_and_round_trip():
    cc = cross_check_original_resultant(FIX)
    assert cc.verdict == Verdict.PASS
    s = cc.scalar
    assert s > 0 and s.denominator == 1 and s.numerator & (s.numerator - 1) == 0
    fwd = forward_substitution(FIX)
    back = FIX.P_golden.subs(fwd, vars=ORIG_VARS.without("lam"))
    assert back.scale(s) == cc.original_resultant
    ident = {n: Polynomial.variable(P_VARS, n) for n in P_VARS}
    inv = inverse_substitution()
    again = {k: v.subs(inv, vars=P_VARS) for k, v in fwd.items()}
    assert again == ident


def test_cross_check_detects_wrong_golden():
    bad = dataclasses.replace(FIX, P_golden=FIX.P_golden + _absent_term())
    assert cross_check_original_resultant(bad).verdict == Verdict.FAIL


def test_scaling_laws_on_small_examples():
    # the laws behind the predicted cross-check scalar
    vs = VariableSet(["lam", "p", "q"])
    S = parse_polynomial("lam^3 + p*lam + q", vs)
    T = parse_polynomial("lam^2 - q*lam + 3*p", vs)
    R = resultant(S, T, "lam")
    a, b, c = 3, 5, Fraction(1, 2)
    assert resultant(S.scale(a), T.scale(b), "lam") == R.scale(Fraction(a) ** 2 * Fraction(b) ** 3)
    lam = Polynomial.variable(vs, "lam")
    Sc, Tc = S.subs({"lam": lam.scale(c)}), T.subs({"lam": lam.scale(c)})
    assert resultant(Sc, Tc, "lam") == R.scale(c ** 6)
