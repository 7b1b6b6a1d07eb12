"""k-derivations of polynomial rings.

A derivation is stored by its images on the variables; everything else
follows from the Leibniz rule D(f) = sum_v D(v) * df/dv.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .grading import homogeneous_components
from .polycore import Polynomial, VariableMismatch, VariableSet, gcd_many, parse_polynomial

DEFAULT_BOUND = 128


class Derivation:
    __slots__ = ("vars", "images")

    def __init__(self, vars, images: Mapping[str, Polynomial]):
        self.vars = vars if isinstance(vars, VariableSet) else VariableSet(vars)
        out = {}
        for name in self.vars:
            im = images.get(name)
            if im is None:
                im = Polynomial.zero(self.vars)
            elif not isinstance(im, Polynomial):
                im = Polynomial.constant(self.vars, im)
            elif im.vars != self.vars:
                raise VariableMismatch(f"image of {name} lives over {im.vars}, expected {self.vars}")
            if not im.is_proper():
                raise ValueError(f"D({name}) is not a polynomial; only polynomial rings are supported")
            out[name] = im
        extra = set(images) - set(self.vars.names)
        if extra:
            raise ValueError(f"images given for unknown variables {sorted(extra)}")
        self.images = out

    @classmethod
    def parse(cls, text: str, vars) -> "Derivation":
        """One ``name -> expression`` per line; omitted variables map to 0."""
        vars = vars if isinstance(vars, VariableSet) else VariableSet(vars)
        images = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            name, sep, expr = line.partition("->")
            if not sep:
                raise ValueError(f"line {lineno}: expected 'name -> polynomial'")
            name = name.strip()
            if name not in vars:
                raise ValueError(f"line {lineno}: unknown variable {name!r}")
            if name in images:
                raise ValueError(f"line {lineno}: image of {name!r} given twice")
            images[name] = parse_polynomial(expr, vars)
        return cls(vars, images)

    def format(self) -> str:
        return "\n".join(f"{n} -> {self.images[n]}" for n in self.vars)

    def __getitem__(self, name: str) -> Polynomial:
        return self.images[name]

    def __call__(self, f: Polynomial) -> Polynomial:
        return apply_derivation(self, f)

    def __eq__(self, other) -> bool:
        return isinstance(other, Derivation) and self.vars == other.vars and self.images == other.images

    def __hash__(self):
        return hash((self.vars, tuple(self.images[n] for n in self.vars)))

    def __add__(self, other: "Derivation") -> "Derivation":
        if other.vars != self.vars:
            raise VariableMismatch("derivations over different ambients")
        return Derivation(self.vars, {n: self.images[n] + other.images[n] for n in self.vars})

    def __rmul__(self, a) -> "Derivation":
        return Derivation(self.vars, {n: a * im for n, im in self.images.items()})

    def is_zero(self) -> bool:
        return all(im.is_zero() for im in self.images.values())

    def __repr__(self) -> str:
        body = " + ".join(f"({self.images[n]})*d/d{n}" for n in self.vars if self.images[n]) or "0"
        return f"Derivation({body})"


def partial(vars, name: str) -> Derivation:
    vars = vars if isinstance(vars, VariableSet) else VariableSet(vars)
    return Derivation(vars, {name: Polynomial.constant(vars, 1)})


def apply_derivation(D: Derivation, f: Polynomial) -> Polynomial:
    if f.vars != D.vars:
        raise VariableMismatch(f"derivation over {D.vars}, polynomial over {f.vars}")
    f.require_proper("apply_derivation")
    out = Polynomial.zero(f.vars)
    for n in f.variables_present():
        im = D.images[n]
        if im:
            out = out + im * f.diff(n)
    return out


@dataclass(frozen=True)
class DDegree:
    """Result of a D-degree computation.

    ``value`` is the degree when it was reached; ``None`` with
    ``exceeded`` unset means the input was 0 (degree -infinity).
    """

    value: int | None = None
    exceeded: int | None = None

    @property
    def is_minus_infinity(self) -> bool:
        return self.value is None and self.exceeded is None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        if self.value is not None:
            return str(self.value)
        if self.exceeded is not None:
            return f">{self.exceeded} (bound exceeded)"
        return "-inf"


MINUS_INFINITY_DEGREE = DDegree()


def d_degree(D: Derivation, f: Polynomial, bound: int = DEFAULT_BOUND) -> DDegree:
    """-1 + min{n : D^n f = 0}, searched for n <= bound."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    if f.is_zero():
        return MINUS_INFINITY_DEGREE
    g = f
    for n in range(1, bound + 1):
        g = apply_derivation(D, g)
        if g.is_zero():
            return DDegree(value=n - 1)
    return DDegree(exceeded=bound)


@dataclass(frozen=True)
class NilpotencyVerdict:
    verdict: str  # "true" | "false" | "indeterminate"
    witness: Polynomial | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.verdict == "true"


def is_locally_nilpotent(D: Derivation, bound: int = DEFAULT_BOUND) -> NilpotencyVerdict:
    """Decide local nilpotency from the variables' orbits.

    Locally nilpotent elements form a subalgebra, so it suffices that every
    variable is killed by some iterate.  An iterate that is a nonzero scalar
    multiple of an earlier one proves the orbit never reaches 0.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    degrees = {}
    for n in D.vars:
        g = Polynomial.variable(D.vars, n)
        seen = {g.monic(): 0}
        for step in range(1, bound + 1):
            g = apply_derivation(D, g)
            if g.is_zero():
                degrees[n] = step - 1
                break
            key = g.monic()
            if key in seen:
                return NilpotencyVerdict(
                    "false", Polynomial.variable(D.vars, n),
                    f"D^{step}({n}) is a multiple of D^{seen[key]}({n})")
            seen[key] = step
        else:
            return NilpotencyVerdict("indeterminate", Polynomial.variable(D.vars, n),
                                     f"{n} not annihilated within {bound} iterations")
    return NilpotencyVerdict("true", None, ", ".join(f"deg_D({n})={d}" for n, d in degrees.items()))


def derivation_weight(D: Derivation, w: Mapping[str, int]) -> tuple[int | None, bool]:
    """Degree d with D(R_i) in R_(i+d), and whether D is homogeneous at all."""
    if D.is_zero():
        raise ValueError("the zero derivation has no degree")
    shifts = set()
    for n in D.vars:
        im = D.images[n]
        if im.is_zero():
            continue
        for deg, _ in homogeneous_components(im, w):
            shifts.add(deg - w[n])
    if len(shifts) == 1:
        return shifts.pop(), True
    return max(shifts), False


def decompose_derivation(D: Derivation, w: Mapping[str, int]) -> list[tuple[int, Derivation]]:
    """Homogeneous summands of D, by increasing degree."""
    if D.is_zero():
        raise ValueError("the zero derivation has no decomposition")
    parts: dict[int, dict[str, Polynomial]] = {}
    for n in D.vars:
        im = D.images[n]
        if im.is_zero():
            continue
        for deg, comp in homogeneous_components(im, w):
            parts.setdefault(deg - w[n], {})[n] = comp
    return [(d, Derivation(D.vars, parts[d])) for d in sorted(parts)]


def jacobian_derivation(f: Polynomial, g: Polynomial, vars=None) -> Derivation:
    """D(h) = det d(f, g, h)/d(x, y, z), expanded along the last row."""
    g = f._coerce(g)
    names = tuple(vars) if vars is not None else f.vars.names
    if len(names) != 3 or len(f.vars) != 3:
        raise ValueError("the jacobian derivation needs exactly three variables")
    x, y, z = names
    fx, fy, fz = (f.diff(v) for v in names)
    gx, gy, gz = (g.diff(v) for v in names)
    return Derivation(f.vars, {
        x: fy * gz - fz * gy,
        y: fz * gx - fx * gz,
        z: fx * gy - fy * gx,
    })


def is_irreducible_derivation(D: Derivation) -> bool:
    """True iff the images of the variables have a constant GCD."""
    if D.is_zero():
        raise ValueError("the zero derivation is not irreducible")
    g = gcd_many([im for im in D.images.values() if im])
    return g.is_constant()

