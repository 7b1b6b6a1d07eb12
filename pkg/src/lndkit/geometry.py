"""Conditions (C1)-(C4) on degree-9 forms of k[x,y,z] graded by (3,2,1).

Besides the four conditions this module holds the curve tools they need:
the affine chart z = 1, the chart y = 1 of the weighted projective plane
(coordinates U = x^2/y^3, V = z^2/y, W = xz/y^2 subject to UV = W^2), and
singular-point scans by elimination.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .elimination import (
    PolyMatrix,
    distinct_root_count,
    rational_rank,
    rational_roots,
    resultant,
    squarefree_part,
)
from .grading import QUINTIC_WEIGHTS, Weights, weighted_degree
from .polycore import Polynomial, VariableSet, divide_exact, gcd_many, parse_polynomial
from .polycore.gcd import content
from .report import Verdict, combine

XYZ = VariableSet(["x", "y", "z"])
UV = VariableSet(["u", "v"])
UVW = VariableSet(["U", "V", "W"])

# exponents of (x, y, z) in U, V, W
CHART_Y_IMAGES = {"U": (2, -3, 0), "V": (0, -1, 2), "W": (1, -2, 1)}


@dataclass
class ConditionResult:
    name: str
    verdict: Verdict
    witness: dict = field(default_factory=dict)
    message: str = ""

    def describe(self) -> str:
        parts = [self.message] if self.message else []
        parts += [f"{k}={_show(v)}" for k, v in self.witness.items()]
        return "; ".join(parts)


def _show(v) -> str:
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_show(x) for x in v) + "]"
    return str(v)


@dataclass
class ConditionReport:
    results: dict[str, ConditionResult]

    def __getitem__(self, name: str) -> ConditionResult:
        return self.results[name]

    @property
    def overall(self) -> Verdict:
        return combine(r.verdict for r in self.results.values())

    def first_failure(self) -> ConditionResult | None:
        return next((r for r in self.results.values() if r.verdict == Verdict.FAIL), None)


@dataclass
class SingularPoint:
    coords: tuple[Fraction, ...]
    multiplicity: int


@dataclass
class SingularityScan:
    chart: str
    points: list[SingularPoint]
    count: int
    complete: bool
    eliminant: Polynomial | None = None
    notes: list[str] = field(default_factory=list)


def _as_xyz(f: Polynomial) -> Polynomial:
    if f.vars != XYZ:
        f = f.embed(XYZ)
    f.require_proper("condition check")
    return f


# (C3) and (C4) -----------------------------------------------------------

def check_C3(f: Polynomial) -> ConditionResult:
    """f(x,y,0) = p x^3 + q x y^3 with p, q nonzero."""
    f = _as_xyz(f)
    h0 = f.subs({"z": 0})
    p = h0.coefficient((3, 0, 0))
    q = h0.coefficient((1, 3, 0))
    extra = h0 - Polynomial(XYZ, {(3, 0, 0): p, (1, 3, 0): q})
    w = {"p": p, "q": q, "f(x,y,0)": h0}
    if not extra.is_zero():
        return ConditionResult("C3", Verdict.FAIL, w, "f(x,y,0) has terms besides x^3, x*y^3")
    if p == 0 or q == 0:
        return ConditionResult("C3", Verdict.FAIL, w, "p or q vanishes")
    return ConditionResult("C3", Verdict.PASS, {"p": p, "q": q})


def check_C4(f: Polynomial, p, q) -> ConditionResult:
    """f_z(x,y,0) = r x^2 y + s y^4 with 3ps - qr nonzero."""
    f = _as_xyz(f)
    h1 = f.diff("z").subs({"z": 0})
    r = h1.coefficient((2, 1, 0))
    s = h1.coefficient((0, 4, 0))
    det = 3 * p * s - q * r
    extra = h1 - Polynomial(XYZ, {(2, 1, 0): r, (0, 4, 0): s})
    w = {"r": r, "s": s, "det": det}
    if not extra.is_zero():
        w["f_z(x,y,0)"] = h1
        return ConditionResult("C4", Verdict.FAIL, w, "f_z(x,y,0) has terms besides x^2*y, y^4")
    if det == 0:
        return ConditionResult("C4", Verdict.FAIL, w, "3ps - qr = 0")
    return ConditionResult("C4", Verdict.PASS, w)


# (C1) --------------------------------------------------------------------

def _monomial_divisors(e: Sequence[int]):
    for d in product(*(range(a + 1) for a in e)):
        yield d


def find_linear_factor(f: Polynomial, v: str, w: Mapping[str, int]):
    """Search factors of v-degree 1 of a weighted-homogeneous, v-primitive f.

    Both extreme v-coefficients must be monomials.  Returns
    ``("factor", L)`` for a rational factor, ``("extension", (shape, G))`` when
    factors of that shape exist only over an extension (their scalar is a root
    of G), ``("none", None)`` when no linear factor exists, and
    ``("unsupported", reason)`` otherwise.
    """
    cs = f.coefficients_in(v)
    d = max(cs)
    lc, tc = cs[d], cs[min(cs)]
    if min(cs) != 0:
        return "factor", Polynomial.variable(f.vars, v)
    if not (lc.is_monomial() and tc.is_monomial()):
        return "unsupported", f"leading or trailing {v}-coefficient is not a monomial"
    vs = f.vars
    wv = w[v]
    (ea, _), = lc.terms.items()
    (eb, _), = tc.terms.items()
    beta_vars = vs.extend(["_beta"])
    beta = Polynomial.variable(beta_vars, "_beta")
    extension = None
    for ma in _monomial_divisors(ea):
        for mb in _monomial_divisors(eb):
            if any(a and b for a, b in zip(ma, mb)):
                continue
            if sum(a * w[n] for a, n in zip(ma, vs.names)) + wv != sum(b * w[n] for b, n in zip(mb, vs.names)):
                continue
            m_a = Polynomial(vs, {ma: 1})
            m_b = Polynomial(vs, {mb: 1})
            # v -> -beta*m_b/m_a, cleared by m_a^d
            acc = Polynomial.zero(beta_vars)
            top = -beta * m_b.embed(beta_vars)
            for k, ck in cs.items():
                acc = acc + ck.embed(beta_vars) * top ** k * m_a.embed(beta_vars) ** (d - k)
            conds = list(acc.coefficients_over([n for n in vs.names if n != v] + [v]).values())
            G = gcd_many(conds) if conds else Polynomial.zero(VariableSet(["_beta"]))
            if G.is_zero() or G.is_constant():
                continue
            roots, _ = rational_roots(G)
            for t in roots:
                L = Polynomial.variable(vs, v) * m_a + m_b.scale(t)
                try:
                    divide_exact(f, L)
                except ArithmeticError:
                    continue
                return "factor", L.normalized()
            if extension is None:
                shape = Polynomial.variable(vs, v) * m_a
                extension = (f"{shape} + t*{m_b}", G)
    if extension is not None:
        return "extension", extension
    return "none", None


def check_C1(f: Polynomial, w: Mapping[str, int] | None = None) -> ConditionResult:
    """Irreducibility over Q for forms with some variable of degree at most 3."""
    w = Weights(w) if w is not None and not isinstance(w, Weights) else (w or QUINTIC_WEIGHTS)
    f.require_proper("check_C1")
    w.covers(f.vars)
    deg, homog = weighted_degree(f, w)
    if not homog:
        raise ValueError("check_C1 needs a weighted-homogeneous polynomial")
    if f.is_constant():
        raise ValueError("constants are units, not irreducible")
    present = f.variables_present()
    for n in present:
        if f.min_degree_in(n) > 0:
            X = Polynomial.variable(f.vars, n)
            if len(f) == 1 and f.total_degree() == 1:
                return ConditionResult("C1", Verdict.PASS, {}, f"{n} is prime")
            return ConditionResult("C1", Verdict.FAIL, {"factor": X}, f"{n} divides f")
    order = sorted((f.degree_in(n), i, n) for i, n in enumerate(f.vars.names) if n in present)
    reasons = []
    for dv, _, v in order:
        if not 1 <= dv <= 3:
            continue
        c = content(f, v)
        if not c.is_constant():
            return ConditionResult("C1", Verdict.FAIL, {"factor": c}, f"content in {v} is nontrivial")
        if dv == 1:
            return ConditionResult("C1", Verdict.PASS, {"variable": v}, f"primitive of degree 1 in {v}")
        kind, info = find_linear_factor(f, v, w)
        if kind == "factor":
            return ConditionResult("C1", Verdict.FAIL, {"factor": info}, f"linear factor in {v}")
        if kind == "none":
            return ConditionResult("C1", Verdict.PASS, {"variable": v},
                                   f"primitive of degree {dv} in {v} with no factor of {v}-degree 1")
        if kind == "extension":
            shape, G = info
            return ConditionResult("C1", Verdict.PASS, {"variable": v, "extension_factor": shape,
                                                        "t_min_poly": G},
                                   "irreducible over Q; splits over a number field")
        reasons.append(f"{v}: {info}")
    if not reasons:
        reasons.append("no variable has degree at most 3")
    return ConditionResult("C1", Verdict.INDETERMINATE, {}, "unsupported: " + "; ".join(reasons))


# charts ------------------------------------------------------------------

def _require_xyz_form(f: Polynomial) -> Polynomial:
    f = _as_xyz(f)
    if f.is_zero():
        raise ValueError("the zero polynomial defines no curve")
    _, homog = weighted_degree(f, QUINTIC_WEIGHTS)
    if not homog:
        raise ValueError("expected a weighted-homogeneous polynomial under x=3,y=2,z=1")
    return f


def dehomogenize_chart_z(f: Polynomial) -> Polynomial:
    """g(u,v) = f(u, v, 1), where u = x/z^3, v = y/z^2."""
    f = _require_xyz_form(f)
    out: dict = {}
    for (i, j, k), c in f.terms.items():
        out[(i, j)] = out.get((i, j), 0) + c
    return Polynomial(UV, out)


def chart_y_ideal(f: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """(x f / y^6, z f / y^5, UV - W^2) in the chart y = 1, f of degree 9."""
    f = _require_xyz_form(f)
    deg, _ = weighted_degree(f, QUINTIC_WEIGHTS)
    if deg != 9:
        raise ValueError("chart_y_ideal expects a form of degree 9")

    def image(lift: Sequence[int]) -> Polynomial:
        out: dict = {}
        for (i, j, k), c in f.terms.items():
            i2, k2 = i + lift[0], k + lift[1]
            cw = i2 % 2
            key = ((i2 - cw) // 2, (k2 - cw) // 2, cw)
            out[key] = out.get(key, 0) + c
        return Polynomial(UVW, out)

    g3 = parse_polynomial("U*V - W^2", UVW)
    return image((1, 0)), image((0, 1)), g3


def f0_family(a=None, b=None) -> Polynomial:
    """y(ax^2+y^3)z + x(x^2+by^3); symbolic a, b when not given."""
    if a is None or b is None:
        vs = VariableSet(["x", "y", "z", "a", "b"])
        A = Polynomial.variable(vs, "a") if a is None else Polynomial.constant(vs, a)
        B = Polynomial.variable(vs, "b") if b is None else Polynomial.constant(vs, b)
    else:
        vs = XYZ
        A, B = Polynomial.constant(vs, a), Polynomial.constant(vs, b)
    x, y, z = (Polynomial.variable(vs, n) for n in "xyz")
    return y * (A * x ** 2 + y ** 3) * z + x * (x ** 2 + B * y ** 3)


def chart_y_ideal_generators(a=None, b=None) -> tuple[Polynomial, Polynomial, Polynomial]:
    """The generators aUW+U^2+bU+W, aUV+UW+V+bW, UV-W^2 for f0(a, b).

    Parameters left as None stay symbolic (extra ambient variables a, b).
    Both clearing identities are verified before returning.
    """
    symbolic = a is None or b is None
    vs = UVW.extend(["a", "b"]) if symbolic else UVW
    env = {}
    for name, val in (("a", a), ("b", b)):
        env[name] = Polynomial.variable(vs, name) if val is None else Polynomial.constant(vs, val)
    U, V, W = (Polynomial.variable(vs, n) for n in "UVW")
    A, B = env["a"], env["b"]
    g1 = A * U * W + U ** 2 + B * U + W
    g2 = A * U * V + U * W + V + B * W
    g3 = U * V - W ** 2
    f0 = f0_family(a, b)
    target = f0.vars
    y = Polynomial.variable(target, "y")
    images = {k: Polynomial.monomial(target, dict(zip("xyz", e))) for k, e in CHART_Y_IMAGES.items()}
    x = Polynomial.variable(target, "x")
    z = Polynomial.variable(target, "z")
    lhs1 = g1.subs(images, clear=y ** 6, vars=target)
    lhs2 = g2.subs(images, clear=y ** 5, vars=target)
    if lhs1 != x * f0:
        raise AssertionError(f"clearing identity y^6*g1 = x*f0 fails: {lhs1 - x * f0}")
    if lhs2 != z * f0:
        raise AssertionError(f"clearing identity y^5*g2 = z*f0 fails: {lhs2 - z * f0}")
    return g1, g2, g3


def jacobian_matrix(polys: Sequence[Polynomial], names: Sequence[str]) -> PolyMatrix:
    return PolyMatrix.from_rows([[p.diff(n) for n in names] for p in polys])


def jacobian_rank(M: PolyMatrix, point: Mapping[str, object]) -> int:
    """Rank of M evaluated at ``point``; every ambient variable must be assigned."""
    return rational_rank(M.evaluate(point))


def chart_y_jacobian(gens: Sequence[Polynomial]) -> PolyMatrix:
    return jacobian_matrix(gens, ("U", "V", "W"))


# singular points -----------------------------------------------------------

def point_multiplicity(g: Polynomial, point: Mapping[str, object]) -> int:
    """Lowest total degree of g after moving ``point`` to the origin."""
    shifted = g.subs({n: Polynomial.variable(g.vars, n) + Fraction(point[n]) for n in g.vars})
    if shifted.is_zero():
        raise ValueError("g vanishes identically")
    return min(sum(e) for e in shifted.terms)


def _univariate(p: Polynomial, keep: str) -> Polynomial:
    return p.embed(VariableSet([keep])) if p.vars.names != (keep,) else p


def affine_singular_points(g: Polynomial, chart: str = "z") -> SingularityScan:
    """Common zeros of (g, g_u, g_v) for a squarefree plane curve g(u, v)."""
    if g.is_zero():
        raise ValueError("the zero polynomial is not a curve")
    if len(g.vars) != 2:
        raise ValueError("expected a polynomial in two variables")
    g.require_proper("affine_singular_points")
    s, t = g.vars.names
    gs, gt = g.diff(s), g.diff(t)
    if g.is_constant():
        return SingularityScan(chart, [], 0, True, None, ["empty curve in this chart"])
    if not gcd_many([g, gs, gt]).is_constant():
        raise ValueError("input is not squarefree")
    # eliminate the variable g actually depends on; other one is the fibre coordinate
    if g.degree_in(t) == 0:
        s, t = t, s
        gs, gt = gt, gs
    elim = [resultant(g, gt, t)]
    if not gs.is_zero():
        elim.append(resultant(g, gs, t))
    elim = [e for e in elim if not e.is_zero()]
    E = gcd_many(elim)
    if E.is_constant():
        return SingularityScan(chart, [], 0, True, E, [])
    Esf = _univariate(squarefree_part(E), s)
    roots, rest = rational_roots(Esf)
    complete = rest.is_constant()
    notes = [] if complete else [f"eliminant factor without rational roots: {rest}"]
    points: list[SingularPoint] = []
    count = 0
    for r in roots:
        fib = [p.subs({s: r}) for p in (g, gs, gt)]
        G = gcd_many(fib)
        if G.is_zero() or G.is_constant():
            continue
        Gt = _univariate(G, t)
        count += distinct_root_count(Gt)
        vroots, vrest = rational_roots(squarefree_part(Gt))
        if not vrest.is_constant():
            notes.append(f"over {s}={r}: {vrest.degree_in(t)} conjugate points with {t} irrational")
        for vr in vroots:
            pt = {s: r, t: vr}
            if any(p.evaluate(pt) != 0 for p in (g, gs, gt)):
                raise AssertionError(f"reported point {pt} is not singular")
            coords = tuple(Fraction(pt[n]) for n in g.vars.names)
            points.append(SingularPoint(coords, point_multiplicity(g, pt)))
    points.sort(key=lambda p: p.coords)
    return SingularityScan(chart, points, count, complete, E, notes)


def boundary_points(f: Polynomial) -> tuple[list[tuple[Fraction, Fraction, Fraction]] | None, str]:
    """Points of f = 0 on z = 0 in chart-y coordinates (U, V, W), or None if [1:0:0] lies on it."""
    f = _require_xyz_form(f)
    h0 = f.subs({"z": 0})
    c = h0.coefficient((3, 0, 0))
    d = h0.coefficient((1, 3, 0))
    if h0.is_zero():
        return None, "z divides f"
    if c == 0:
        return None, "the point [1:0:0] lies on the curve; the x-chart is not analysed"
    out = [(Fraction(0), Fraction(0), Fraction(0))]
    if d != 0:
        out.append((Fraction(-d, 1) / c, Fraction(0), Fraction(0)))
    return out, ""


def singular_boundary_points(f: Polynomial):
    """Classify the z = 0 points by the rank of the chart-y Jacobian."""
    pts, why = boundary_points(f)
    if pts is None:
        return None, why
    gens = chart_y_ideal(f)
    J = chart_y_jacobian(gens)
    out = []
    for U0, V0, W0 in pts:
        pt = {"U": U0, "V": V0, "W": W0}
        if any(g.evaluate(pt) != 0 for g in gens):
            raise AssertionError(f"boundary point {pt} is not on the curve")
        out.append((pt, jacobian_rank(J, pt)))
    return out, ""


def check_C2(f: Polynomial, c1: ConditionResult | None = None) -> ConditionResult:
    """At least two singular points on the curve f = 0 in P(3,2,1)."""
    f = _require_xyz_form(f)
    deg, _ = weighted_degree(f, QUINTIC_WEIGHTS)
    if deg != 9:
        raise ValueError("check_C2 expects a form of degree 9")
    c1 = c1 or check_C1(f, QUINTIC_WEIGHTS)
    if c1.verdict == Verdict.FAIL:
        raise ValueError(f"check_C2 needs an irreducible input ({c1.describe()})")
    scan = affine_singular_points(dehomogenize_chart_z(f))
    bnd, why = singular_boundary_points(f)
    sing = [f"(u,v)=({p.coords[0]},{p.coords[1]}) mult {p.multiplicity}" for p in scan.points]
    total = scan.count
    complete = scan.complete
    notes = list(scan.notes)
    if bnd is None:
        complete = False
        notes.append(why)
    else:
        for pt, rank in bnd:
            if rank < 2:
                total += 1
                sing.append(f"(U,V,W)=({pt['U']},{pt['V']},{pt['W']}) jacobian rank {rank}")
    w = {"count": total, "complete": complete, "points": sing}
    if notes:
        w["notes"] = notes
    if total >= 2:
        return ConditionResult("C2", Verdict.PASS, w, f"{total} singular points")
    if complete:
        return ConditionResult("C2", Verdict.FAIL, w, f"exactly {total} singular point(s)")
    return ConditionResult("C2", Verdict.INDETERMINATE, w, "count not certified")


def check_all_conditions(f: Polynomial) -> ConditionReport:
    f = _as_xyz(f)
    res: dict[str, ConditionResult] = {}
    c1 = check_C1(f, QUINTIC_WEIGHTS)
    res["C1"] = c1
    try:
        deg, homog = weighted_degree(f, QUINTIC_WEIGHTS)
    except ValueError:
        deg, homog = None, False
    if c1.verdict == Verdict.FAIL:
        res["C2"] = ConditionResult("C2", Verdict.INDETERMINATE, {}, "not evaluated: C1 failed")
    elif deg != 9 or not homog:
        res["C2"] = ConditionResult("C2", Verdict.FAIL, {"degree": deg}, "not a form of degree 9")
    else:
        res["C2"] = check_C2(f, c1)
    c3 = check_C3(f)
    res["C3"] = c3
    if c3.verdict == Verdict.PASS:
        res["C4"] = check_C4(f, c3.witness["p"], c3.witness["q"])
    else:
        res["C4"] = ConditionResult("C4", Verdict.INDETERMINATE, {}, "not evaluated: needs (p,q) from C3")
    return ConditionReport(res)
