"""The ring A = R[w]/(w^n - f), R = k[x,y,z], and graded automorphisms of R.

A carries the grading x:3n, y:2n, z:n, w:9, so a form f of degree 9 in R
makes w^n - f homogeneous.  Elements are stored as their w^l-coefficients,
l = 0..n-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .grading import QUINTIC_WEIGHTS, monomial_basis
from .polycore import Polynomial, VariableMismatch, VariableSet, pseudo_remainder, substitute
from .report import Verdict

XYZ = VariableSet(["x", "y", "z"])
PARAM_NAMES = ("kappa", "lam", "mu", "a", "b", "c")


class QuotientRing:
    """A = R[w]/(w^n - f); ``graded=True`` enforces 3 not dividing n."""

    def __init__(self, n: int, f: Polynomial, graded: bool = True):
        if not isinstance(n, int) or n < 2:
            raise ValueError("n must be an integer >= 2")
        if graded and n % 3 == 0:
            raise ValueError("the grading x:3n, y:2n, z:n, w:9 needs n not divisible by 3")
        self.n = n
        self.f = f
        self.vars = f.vars
        self.graded = graded

    def __eq__(self, other) -> bool:
        return isinstance(other, QuotientRing) and (self.n, self.f) == (other.n, other.f)

    def __hash__(self):
        return hash((self.n, self.f))

    def __repr__(self) -> str:
        return f"QuotientRing(n={self.n}, f={self.f})"

    def element(self, coeffs: Sequence) -> "QuotientElement":
        """Element sum_l coeffs[l] * w^l; longer lists are reduced."""
        return QuotientElement(self, self._reduce(list(coeffs)))

    def from_poly(self, p) -> "QuotientElement":
        return self.element([p])

    def one(self) -> "QuotientElement":
        return self.from_poly(1)

    def w(self) -> "QuotientElement":
        return self.element([0, 1])

    def _lift(self, c) -> Polynomial:
        if isinstance(c, Polynomial):
            if c.vars != self.vars:
                raise VariableMismatch(f"coefficient over {c.vars}, ring over {self.vars}")
            c.require_proper("quotient ring element")
            return c
        return Polynomial.constant(self.vars, c)

    def _reduce(self, cs: list) -> tuple[Polynomial, ...]:
        cs = [self._lift(c) for c in cs]
        n = self.n
        # w^(n+l) = f * w^l, from the top down
        for l in range(len(cs) - 1, n - 1, -1):
            if not cs[l].is_zero():
                cs[l - n] = cs[l - n] + self.f * cs[l]
        cs = cs[:n] + [Polynomial.zero(self.vars)] * max(0, n - len(cs))
        return tuple(cs)

    def degree_of_monomial(self, exps: Sequence[int], l: int) -> int:
        i, j, k = exps
        return self.n * (3 * i + 2 * j + k) + 9 * l


class QuotientElement:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: QuotientRing, coeffs: tuple[Polynomial, ...]):
        self.ring = ring
        self.coeffs = coeffs

    @property
    def n(self) -> int:
        return self.ring.n

    @property
    def f(self) -> Polynomial:
        return self.ring.f

    def _check(self, other) -> "QuotientElement":
        if not isinstance(other, QuotientElement):
            return self.ring.from_poly(other)
        if other.ring != self.ring:
            raise VariableMismatch("elements of different quotient rings")
        return other

    def __add__(self, other) -> "QuotientElement":
        other = self._check(other)
        return QuotientElement(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "QuotientElement":
        return QuotientElement(self.ring, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> "QuotientElement":
        return self + (-self._check(other))

    def __mul__(self, other) -> "QuotientElement":
        other = self._check(other)
        n = self.n
        out = [Polynomial.zero(self.ring.vars)] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return self.ring.element(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QuotientElement":
        if e < 0:
            raise ValueError("negative powers are not supported")
        acc, base = self.ring.one(), self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuotientElement):
            try:
                other = self.ring.from_poly(other)
            except (TypeError, VariableMismatch):
                return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def degree(self) -> int | None:
        """A-degree when homogeneous; None for 0 or a mixed element."""
        degs = set()
        iv = [self.ring.vars.index(n) for n in "xyz"]
        for l, c in enumerate(self.coeffs):
            for e in c.terms:
                degs.add(self.ring.degree_of_monomial([e[i] for i in iv], l))
        return degs.pop() if len(degs) == 1 else None

    def __repr__(self) -> str:
        parts = []
        for l, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            wpart = "" if l == 0 else ("w" if l == 1 else f"w^{l}")
            parts.append(str(c) if not wpart else f"({c})*{wpart}")
        return " + ".join(parts) or "0"


def quotient_arith(op: str, ring: QuotientRing, p: QuotientElement, q: QuotientElement) -> QuotientElement:
    for e in (p, q):
        if e.ring != ring:
            raise VariableMismatch("element does not belong to the given ring")
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def graded_component_A(n: int, d: int) -> list[tuple[int, int, int, int]]:
    """Exponents (i, j, k, l) of x^i y^j z^k w^l of A-degree d with l < n."""
    if not isinstance(n, int) or n < 2 or n % 3 == 0:
        raise ValueError("n must be >= 2 and not divisible by 3")
    out = []
    for l in range(n):
        rest = d - 9 * l
        if rest < 0 or rest % n:
            continue
        out.extend(e + (l,) for e in monomial_basis(rest // n, QUINTIC_WEIGHTS, XYZ))
    out.sort(reverse=True)
    return out


def format_A_monomial(e: Sequence[int]) -> str:
    parts = []
    for name, a in zip("xyzw", e):
        if a:
            parts.append(name if a == 1 else f"{name}^{a}")
    return "*".join(parts) or "1"


@dataclass(frozen=True)
class AutomorphismParams:
    """alpha(x) = kappa x + a y z + b z^3, alpha(y) = lam y + c z^2, alpha(z) = mu z."""

    kappa: Polynomial
    lam: Polynomial
    mu: Polynomial
    a: Polynomial
    b: Polynomial
    c: Polynomial

    def __post_init__(self):
        vs = {p.vars for p in self.values()}
        if len(vs) != 1:
            raise VariableMismatch("parameters must share one ambient")
        for name in ("kappa", "lam", "mu"):
            if getattr(self, name).is_zero():
                raise ValueError(f"{name} must be nonzero")

    def values(self) -> tuple[Polynomial, ...]:
        return (self.kappa, self.lam, self.mu, self.a, self.b, self.c)

    @property
    def vars(self) -> VariableSet:
        return self.kappa.vars

    @classmethod
    def symbolic(cls, names: Sequence[str] = PARAM_NAMES) -> "AutomorphismParams":
        vs = VariableSet(names)
        return cls(*(Polynomial.variable(vs, n) for n in names))

    @classmethod
    def constants(cls, kappa, lam, mu, a=0, b=0, c=0, vars=("mu",)) -> "AutomorphismParams":
        vs = VariableSet(vars)

        def lift(v):
            return v.embed(vs) if isinstance(v, Polynomial) else Polynomial.constant(vs, v)

        return cls(*(lift(v) for v in (kappa, lam, mu, a, b, c)))

    @classmethod
    def identity(cls, vars=("mu",)) -> "AutomorphismParams":
        return cls.constants(1, 1, 1, vars=vars)

    @classmethod
    def torus(cls, name: str = "mu") -> "AutomorphismParams":
        vs = VariableSet([name])
        m = Polynomial.variable(vs, name)
        z = Polynomial.zero(vs)
        return cls(m ** 3, m ** 2, m, z, z, z)

    def specialize(self, values: dict) -> "AutomorphismParams":
        return AutomorphismParams(*(p.subs(values) for p in self.values()))


def _ambient(g: Polynomial, params: AutomorphismParams) -> VariableSet:
    for n in "xyz":
        if n not in g.vars:
            raise VariableMismatch(f"polynomial lacks the variable {n}")
    clash = set(params.vars.names) & set(g.vars.names)
    if clash:
        raise VariableMismatch(f"parameter variables collide with the ring: {sorted(clash)}")
    return g.vars.extend(params.vars.names)


def apply_graded_automorphism(params: AutomorphismParams, g: Polynomial) -> Polynomial:
    """alpha(g); extra variables of g besides x, y, z are treated as scalars."""
    g.require_proper("apply_graded_automorphism")
    amb = _ambient(g, params)
    x, y, z = (Polynomial.variable(amb, n) for n in "xyz")
    K, L, M, A, B, C = (p.embed(amb) for p in params.values())
    images = {"x": K * x + A * y * z + B * z ** 3, "y": L * y + C * z ** 2, "z": M * z}
    return substitute(g, images, vars=amb)


def xyz_degree(h: Polynomial) -> int:
    """Weighted degree in x, y, z (other variables weigh 0); raises if mixed."""
    degs = {3 * i + 2 * j + k for (i, j, k) in h.coefficients_over(["x", "y", "z"])}
    if len(degs) != 1:
        raise ValueError("h is not weighted-homogeneous in x, y, z")
    return degs.pop()


def centralizer_constraint_system(h: Polynomial, params: AutomorphismParams | None = None):
    """[(monomial exponents in x, y, z, coefficient of alpha(h) - h)] over R_9."""
    if h.is_zero() or xyz_degree(h) != 9:
        raise ValueError("h must be a nonzero form of degree 9")
    params = params or AutomorphismParams.symbolic()
    diff = apply_graded_automorphism(params, h) - h.embed(_ambient(h, params))
    coeffs = diff.coefficients_over(["x", "y", "z"])
    cvars = next(iter(coeffs.values())).vars if coeffs else None
    out = []
    for e in monomial_basis(9, QUINTIC_WEIGHTS, XYZ):
        c = coeffs.get(e)
        if c is None:
            amb = diff.vars
            rest = [n for n in amb.names if n not in "xyz"]
            c = Polynomial.zero(cvars or VariableSet(rest))
        out.append((e, c))
    return out


@dataclass
class TorusCheck:
    verdict: Verdict
    identity_holds: bool
    residues: list
    detail: str = ""


def verify_torus_family(h: Polynomial) -> TorusCheck:
    """alpha(x,y,z) = (mu^3 x, mu^2 y, mu z) fixes h modulo mu^9 = 1."""
    if h.is_zero() or xyz_degree(h) != 9:
        raise ValueError("h must be a nonzero form of degree 9")
    torus = AutomorphismParams.torus("mu")
    amb = _ambient(h, torus)
    mu = Polynomial.variable(amb, "mu")
    he = h.embed(amb)
    lhs = apply_graded_automorphism(torus, h) - he
    ok_i = lhs == (mu ** 9 - 1) * he
    sym = AutomorphismParams.symbolic()
    entries = centralizer_constraint_system(h, sym)
    bad = []
    for e, c in entries:
        vs = c.vars
        if "mu" not in vs:
            vs = vs.extend(["mu"])
            c = c.embed(vs)
        m = Polynomial.variable(vs, "mu")
        spec = c.subs({"kappa": m ** 3, "lam": m ** 2, "a": 0, "b": 0, "c": 0}, vars=vs)
        rem = pseudo_remainder(spec, m ** 9 - 1, "mu")
        if not rem.is_zero():
            bad.append((e, rem))
    ok = ok_i and not bad
    detail = "alpha_torus(h) - h = (mu^9 - 1) h" if ok_i else "torus identity fails"
    if bad:
        detail += f"; {len(bad)} constraint entries survive mod mu^9 - 1"
    return TorusCheck(Verdict.PASS if ok else Verdict.FAIL, ok_i, bad, detail)
