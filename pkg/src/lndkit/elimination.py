"""Sylvester matrices, fraction-free determinants, resultants and GCDs.

Row convention for Sylvester matrices: the n = deg_v(g) shifted coefficient
rows of f come first, then the m = deg_v(f) rows of g.  With this choice
Res(v - a, v - b) = a - b.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from sympy import divisors

from .polycore import Polynomial, VariableSet, divide_exact, gcd, gcd_many


def multivariate_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """GCD normalized to integer primitive coefficients and a positive leading term."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    return gcd(f, g)


@dataclass(frozen=True)
class PolyMatrix:
    rows: int
    cols: int
    entries: tuple[Polynomial, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")
        if self.entries:
            vs = self.entries[0].vars
            if any(e.vars != vs for e in self.entries):
                raise ValueError("matrix entries must share one ambient")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Polynomial]]) -> "PolyMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(e for r in rows for e in r))

    @property
    def vars(self) -> VariableSet:
        return self.entries[0].vars

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Polynomial]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list[Polynomial]]:
        return [self.row(i) for i in range(self.rows)]

    def evaluate(self, point: Mapping[str, object]) -> list[list[Fraction]]:
        return [[Fraction(e.evaluate(point)) for e in self.row(i)] for i in range(self.rows)]

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.to_rows()) + "]"


def coefficient_row(f: Polynomial, v: str, target: VariableSet) -> list[Polynomial]:
    """Coefficients of f in v, highest power first, as polynomials over ``target``."""
    cs = f.coefficients_in(v)
    d = max(cs)
    zero = Polynomial.zero(target)
    return [cs[k].embed(target) if k in cs else zero for k in range(d, -1, -1)]


def sylvester_matrix(f: Polynomial, g: Polynomial, v: str) -> PolyMatrix:
    """Sylvester matrix of f, g in v; entries live over the ambient minus v."""
    g = f._coerce(g)
    if f.is_zero() or g.is_zero():
        raise ValueError("sylvester matrix of a zero polynomial")
    m, n = f.degree_in(v), g.degree_in(v)
    if m < 1 and n < 1:
        raise ValueError(f"both polynomials are free of {v}")
    target = f.vars.without(v) if len(f.vars) > 1 else f.vars
    fr = coefficient_row(f, v, target)
    gr = coefficient_row(g, v, target)
    size = m + n
    zero = Polynomial.zero(target)
    rows = []
    for i in range(n):
        rows.append([zero] * i + fr + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gr + [zero] * (size - n - 1 - i))
    return PolyMatrix.from_rows(rows)


def _div(a: Polynomial, b: Polynomial) -> Polynomial:
    if b.is_constant():
        c = b.constant_value()
        return a if c == 1 else a.scale(Fraction(1) / Fraction(c))
    return divide_exact(a, b)


def fraction_free_determinant(M: PolyMatrix) -> Polynomial:
    """Bareiss elimination; every division is exact, row swaps flip the sign."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        raise ValueError("empty matrix")
    a = M.to_rows()
    sign = 1
    prev = Polynomial.constant(M.vars, 1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Polynomial.zero(M.vars)
        p = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                t = row_i[j] * p
                if not aik.is_zero() and not row_k[j].is_zero():
                    t = t - aik * row_k[j]
                row_i[j] = _div(t, prev) if not t.is_zero() else t
            row_i[k] = Polynomial.zero(M.vars)
        prev = p
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def resultant(f: Polynomial, g: Polynomial, v: str) -> Polynomial:
    """Res_v(f, g) = det sylvester_matrix(f, g, v), over the ambient minus v."""
    return fraction_free_determinant(sylvester_matrix(f, g, v))


def rational_rank(rows: Sequence[Sequence[object]]) -> int:
    """Rank of a rational matrix by exact Gaussian elimination."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    ncols = len(a[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(rank + 1, len(a)):
            if a[i][c]:
                f = a[i][c] / a[rank][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


# univariate tools --------------------------------------------------------

def _univariate_variable(p: Polynomial) -> str | None:
    present = p.variables_present()
    if len(present) > 1:
        raise ValueError(f"expected a univariate polynomial, found variables {present}")
    return present[0] if present else None


def squarefree_part(p: Polynomial) -> Polynomial:
    v = _univariate_variable(p)
    if v is None:
        return p.normalized()
    return divide_exact(p, gcd(p, p.diff(v))).normalized()


def integer_coefficients(p: Polynomial, v: str) -> list[int]:
    """Integer coefficient list (lowest power first) of a univariate polynomial."""
    q = p.normalized()
    i = q.vars.index(v)
    out = [0] * (q.degree_in(v) + 1)
    for e, c in q.terms.items():
        out[e[i]] = int(c)
    return out


def rational_roots(p: Polynomial) -> tuple[list[Fraction], Polynomial]:
    """Distinct rational roots of a univariate polynomial and the root-free cofactor.

    The cofactor is what remains after dividing out every rational linear
    factor with its full multiplicity; it is constant iff p splits over Q.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has every number as a root")
    v = _univariate_variable(p)
    if v is None:
        return [], p
    x = Polynomial.variable(p.vars, v)
    roots: list[Fraction] = []
    rest = p
    if rest.min_degree_in(v) > 0:
        roots.append(Fraction(0))
        while rest.min_degree_in(v) > 0:
            rest = divide_exact(rest, x)
    if rest.degree_in(v) > 0:
        coeffs = integer_coefficients(squarefree_part(rest), v)
        lead, const = abs(coeffs[-1]), abs(coeffs[0])
        cands = set()
        for num in divisors(const):
            for den in divisors(lead):
                r = Fraction(num, den)
                cands.add(r)
                cands.add(-r)
        for r in sorted(cands):
            if _int_eval_zero(coeffs, r):
                roots.append(r)
                lin = x.scale(r.denominator) - r.numerator
                while True:
                    try:
                        rest = divide_exact(rest, lin)
                    except ArithmeticError:
                        break
    roots.sort()
    return roots, rest


def _int_eval_zero(coeffs: list[int], r: Fraction) -> bool:
    num, den = r.numerator, r.denominator
    n = len(coeffs) - 1
    total = 0
    for k, a in enumerate(coeffs):
        total += a * num ** k * den ** (n - k)
    return total == 0


def distinct_root_count(p: Polynomial) -> int:
    """Number of distinct complex roots of a nonzero univariate polynomial."""
    v = _univariate_variable(p)
    if v is None:
        return 0
    return squarefree_part(p).degree_in(v)


__all__ = [
    "PolyMatrix", "multivariate_gcd", "sylvester_matrix", "fraction_free_determinant",
    "resultant", "rational_rank", "squarefree_part", "rational_roots", "distinct_root_count",
    "gcd_many",
]
