"""The binary sextic pipeline: S, T, their rewritings, and P = Res_lam(S, T).

Variables: the original invariants A, B, C, Delta; the rewritten B', C'
(spelled Bp, Cp); and the final coordinates (u, x, y, z) = (2^4 Delta,
2^2 C', B', A) graded by (5, 3, 2, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .elimination import resultant
from .fixtures import (
    BP_DEFINITION_TEXT,
    CP_DEFINITION_TEXT,
    FINAL_VARS,
    MID_VARS,
    ORIG_VARS,
    P_GOLDEN_TEXT,
    P_VARS,
    S_FINAL_TEXT,
    S_MID_TEXT,
    S_ORIG_TEXT,
    S_PRINTED_TEXT,
    S_SCALED_TEXT,
    T_FINAL_TEXT,
    T_MID_TEXT,
    T_ORIG_TEXT,
    T_SCALED_TEXT,
)
from .grading import SEXTIC_WEIGHTS, weighted_degree
from .polycore import NotDivisibleError, Polynomial, divide_exact, parse_polynomial
from .report import Verdict

P_TERM_COUNT = 36


@dataclass(frozen=True)
class SexticFixture:
    S_orig: Polynomial
    T_orig: Polynomial
    S_mid: Polynomial
    T_mid: Polynomial
    S_scaled: Polynomial
    T_scaled: Polynomial
    S_final: Polynomial
    T_final: Polynomial
    P_golden: Polynomial
    Bp_definition: Polynomial
    Cp_definition: Polynomial


def build_sextic_inputs() -> SexticFixture:
    return SexticFixture(
        S_orig=parse_polynomial(S_ORIG_TEXT, ORIG_VARS),
        T_orig=parse_polynomial(T_ORIG_TEXT, ORIG_VARS),
        S_mid=parse_polynomial(S_MID_TEXT, MID_VARS),
        T_mid=parse_polynomial(T_MID_TEXT, MID_VARS),
        S_scaled=parse_polynomial(S_SCALED_TEXT, MID_VARS),
        T_scaled=parse_polynomial(T_SCALED_TEXT, MID_VARS),
        S_final=parse_polynomial(S_FINAL_TEXT, FINAL_VARS),
        T_final=parse_polynomial(T_FINAL_TEXT, FINAL_VARS),
        P_golden=parse_polynomial(P_GOLDEN_TEXT, P_VARS),
        Bp_definition=parse_polynomial(BP_DEFINITION_TEXT, ORIG_VARS),
        Cp_definition=parse_polynomial(CP_DEFINITION_TEXT, ORIG_VARS),
    )


@dataclass
class IdentityCheck:
    name: str
    holds: bool
    difference: Polynomial


def _eliminate_primes(fix: SexticFixture, p: Polynomial) -> Polynomial:
    """Replace Bp, Cp by their definitions in A, B, C."""
    return p.subs({"Bp": fix.Bp_definition, "Cp": fix.Cp_definition}, vars=ORIG_VARS)


def _rescale(p: Polynomial, factor: int) -> Polynomial:
    """factor * p(lam / 16)."""
    lam = Polynomial.variable(p.vars, "lam")
    return p.subs({"lam": lam.scale(Fraction(1, 16))}).scale(factor)


def rewrite_identities(fix: SexticFixture) -> list[IdentityCheck]:
    pairs = [
        ("S = S in B', C'", fix.S_orig, _eliminate_primes(fix, fix.S_mid)),
        ("T = T in B'", fix.T_orig, _eliminate_primes(fix, fix.T_mid)),
        ("2^2 S(lam/16)", _rescale(fix.S_orig, 4), _eliminate_primes(fix, fix.S_scaled)),
        ("2^4 T(lam/16)", _rescale(fix.T_orig, 16), _eliminate_primes(fix, fix.T_scaled)),
    ]
    return [IdentityCheck(name, lhs == rhs, lhs - rhs) for name, lhs, rhs in pairs]


def verify_rewrite_chain(fix: SexticFixture) -> tuple[Verdict, list[IdentityCheck]]:
    checks = rewrite_identities(fix)
    return (Verdict.PASS if all(c.holds for c in checks) else Verdict.FAIL), checks


def to_final_coordinates(p: Polynomial) -> Polynomial:
    """Rename (A, Bp, Cp, Delta) to (z, y, x/4, u/16)."""
    z, y, x, u = (Polynomial.variable(FINAL_VARS, n) for n in ("z", "y", "x", "u"))
    return p.subs({"A": z, "Bp": y, "Cp": x.scale(Fraction(1, 4)), "Delta": u.scale(Fraction(1, 16)),
                   "lam": Polynomial.variable(FINAL_VARS, "lam")}, vars=FINAL_VARS)


def printed_S_discrepancy(fix: SexticFixture) -> Polynomial:
    """S_PRINTED_TEXT minus S recovered from its B', C' form (zero iff they agree)."""
    return parse_polynomial(S_PRINTED_TEXT, ORIG_VARS) - _eliminate_primes(fix, fix.S_mid)


def verify_final_forms(fix: SexticFixture) -> bool:
    return (to_final_coordinates(fix.S_scaled) == fix.S_final
            and to_final_coordinates(fix.T_scaled) == fix.T_final)


def compute_sextic_resultant(fix: SexticFixture) -> Polynomial:
    """Res_lam(S_final, T_final) over (z, y, x, u)."""
    return resultant(fix.S_final, fix.T_final, "lam").embed(P_VARS)


@dataclass
class PropertyCheck:
    name: str
    holds: bool
    detail: str


def p_properties(P: Polynomial) -> list[PropertyCheck]:
    P = P.embed(P_VARS) if P.vars != P_VARS else P
    out = []
    if P.is_zero():
        deg, homog = None, False
    else:
        deg, homog = weighted_degree(P, SEXTIC_WEIGHTS)
    out.append(PropertyCheck("homogeneous of degree 15", homog and deg == 15, f"degree {deg}, homogeneous={homog}"))
    out.append(PropertyCheck("36 terms", len(P) == P_TERM_COUNT, f"{len(P)} terms"))
    dz = P.degree_in("z")
    out.append(PropertyCheck("degree 10 in z", dz == 10, f"deg_z = {dz}"))
    iu, ix = P.vars.index("u"), P.vars.index("x")
    stray = [e for e in P.terms if e[iu] == 0 and e[ix] == 0]
    out.append(PropertyCheck("P in (u, x)", not stray, f"{len(stray)} terms outside (u, x)"))
    base = P.subs({"y": 0, "z": 0})
    want = parse_polynomial("-x^5 - u^3", P_VARS)
    out.append(PropertyCheck("P(u,x,0,0) = -(x^5+u^3)", base == want, f"P(u,x,0,0) = {base}"))
    return out


def verify_P_properties(P: Polynomial) -> tuple[Verdict, list[PropertyCheck]]:
    checks = p_properties(P)
    return (Verdict.PASS if all(c.holds for c in checks) else Verdict.FAIL), checks


def inverse_substitution() -> dict[str, Polynomial]:
    """A, B, C, Delta in terms of (z, y, x, u), inverting the definitions of B', C', u, x, y, z."""
    z, y, x, u = (Polynomial.variable(P_VARS, n) for n in ("z", "y", "x", "u"))
    B = (y - 11 * z ** 2).scale(Fraction(1, 900))
    # 3375 C = C' - 2700 A B + 4 A^3 with C' = x/4
    C = (x.scale(Fraction(1, 4)) - 2700 * z * B + 4 * z ** 3).scale(Fraction(1, 3375))
    return {"A": z, "B": B, "C": C, "Delta": u.scale(Fraction(1, 16))}


def forward_substitution(fix: SexticFixture) -> dict[str, Polynomial]:
    """(u, x, y, z) in terms of A, B, C, Delta."""
    A = Polynomial.variable(ORIG_VARS, "A")
    D = Polynomial.variable(ORIG_VARS, "Delta")
    return {"z": A, "y": fix.Bp_definition, "x": 4 * fix.Cp_definition, "u": 16 * D}


@dataclass
class CrossCheck:
    verdict: Verdict
    scalar: Fraction | None
    original_resultant: Polynomial
    detail: str = ""


def cross_check_original_resultant(fix: SexticFixture) -> CrossCheck:
    """Res_lam(S_orig, T_orig) rewritten in (u, x, y, z) divided by P_golden."""
    R = resultant(fix.S_orig, fix.T_orig, "lam")
    R_final = R.subs(inverse_substitution(), vars=P_VARS)
    try:
        q = divide_exact(R_final, fix.P_golden)
    except NotDivisibleError as exc:
        return CrossCheck(Verdict.FAIL, None, R, f"P does not divide the rewritten resultant: {exc}")
    if not q.is_constant() or q.is_zero():
        return CrossCheck(Verdict.FAIL, None, R, f"quotient {q} is not a nonzero constant")
    scalar = Fraction(q.constant_value())
    return CrossCheck(Verdict.PASS, scalar, R, f"Res(S, T) = {scalar} * P")
