"""Builtin polynomials, kept as source text in the parser grammar."""

from __future__ import annotations

from .polycore import Polynomial, VariableSet, parse_polynomial

XYZ = VariableSet(["x", "y", "z"])

F_TEXT = "x^2*z^3 - 2*x*y^2*z^2 + y^4*z - 72*x^2*y*z + 8*x*y^3 - 432*x^3"

F0_TEXT = "y*(a*x^2 + y^3)*z + x*(x^2 + b*y^3)"

# kernel contains x and x*z + y^2
FLAGSHIP_DERIVATION_TEXT = """\
x -> 0
y -> -x
z -> 2*y
"""

# binary sextic, original invariants
ORIG_VARS = VariableSet(["lam", "A", "B", "C", "Delta"])
S_PRINTED_TEXT = "1024*lam^3 - 1152*A*lam^2 + (132*A^2 - 10800*B)*lam + (3375*C + 2700*A*B - 4*A^3)"
# the lam^2 and lam coefficients of S_PRINTED_TEXT disagree in sign with every rewritten form of S;
# this version agrees with all of them
S_ORIG_TEXT = "1024*lam^3 + 1152*A*lam^2 + (10800*B - 132*A^2)*lam + (3375*C + 2700*A*B - 4*A^3)"
T_ORIG_TEXT = "lam*(256*lam^2 - 320*A*lam + 55*A^2 + 4500*B)^2 - Delta"

# Bp, Cp stand for B', C'
MID_VARS = VariableSet(["lam", "A", "Bp", "Cp", "Delta"])
BP_DEFINITION_TEXT = "2^2*3^2*5^2*B + 11*A^2"
CP_DEFINITION_TEXT = "3^3*5^3*C + 2^2*3^3*5^2*A*B - 2^2*A^3"
S_MID_TEXT = "2^10*lam^3 + 2^7*3^2*A*lam^2 + 2^2*3*(Bp - 2*11*A^2)*lam + Cp"
T_MID_TEXT = "lam*(2^8*lam^2 - 2^6*5*A*lam + 5*Bp)^2 - Delta"
S_SCALED_TEXT = "lam^3 + 2*3^2*A*lam^2 + 3*(Bp - 2*11*A^2)*lam + 2^2*Cp"
T_SCALED_TEXT = "lam*(lam^2 - 2^2*5*A*lam + 5*Bp)^2 - 2^4*Delta"

# z first so that u*z^10 leads under weights u=5, x=3, y=2, z=1
FINAL_VARS = VariableSet(["lam", "z", "y", "x", "u"])
P_VARS = VariableSet(["z", "y", "x", "u"])
S_FINAL_TEXT = "lam^3 + (18*z)*lam^2 + 3*(y - 22*z^2)*lam + x"
T_FINAL_TEXT = "lam*(lam^2 - (20*z)*lam + 5*y)^2 - u"

P_GOLDEN_TEXT = (
    "138468423456*u*z^10 - 52450160400*x*y^2*z^8 - 42353126640*u*y*z^8 + 6357595200*x^2*y*z^7"
    " + 13658752800*x*y^3*z^6 - 1486797840*u*x*z^7 + 3962439360*u*y^2*z^6 - 192654400*x^3*z^6"
    " - 1020180000*x^2*y^2*z^5 - 880071600*x*y^4*z^4 + 217534440*u*x*y*z^5 - 102459600*u*y^3*z^4"
    " + 12117240*x^3*y*z^4 + 24493600*x^2*y^3*z^3 - 1192800*x*y^5*z^2 - 15933528*u^2*z^5"
    " - 3156780*u*x^2*z^4 + 5301960*u*x*y^2*z^3 - 142080*u*y^4*z^2 - 27760*x^4*z^3"
    " - 236040*x^3*y^2*z^2 + 16800*x^2*y^4*z - 400*x*y^6 + 189960*u^2*y*z^3 - 53940*u*x^2*y*z^2"
    " + 9240*u*x*y^3*z - 48*u*y^5 + 840*x^4*y*z - 40*x^3*y^3 - 6030*u^2*x*z^2 + 840*u^2*y^2*z"
    " + 210*u*x^3*z - 60*u*x^2*y^2 - x^5 - 15*u^2*x*y - u^3"
)


def quintic_F() -> Polynomial:
    return parse_polynomial(F_TEXT, XYZ)


def f0(a, b) -> Polynomial:
    """Member of the family y(ax^2+y^3)z + x(x^2+by^3) at rational a, b."""
    from .geometry import f0_family

    return f0_family(a, b)


def flagship_derivation():
    from .derivation import Derivation

    return Derivation.parse(FLAGSHIP_DERIVATION_TEXT, XYZ)


BUILTINS = {"F": F_TEXT}
