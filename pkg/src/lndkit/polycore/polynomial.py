"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Polynomial` is an immutable map from exponent tuples to nonzero
coefficients, bound to an ordered :class:`VariableSet`.  Exponents are signed
so that Laurent monomials can appear as intermediates (chart substitutions);
most public operations insist on proper input.

Coefficients are kept as ``int`` whenever they are integral and as
:class:`fractions.Fraction` otherwise, which keeps the integer-heavy paths
fast without giving up exactness.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Tuple, Union

Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction]


def as_scalar(c) -> Scalar:
    """Coerce an exact rational to the canonical int-or-Fraction form."""
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return as_scalar(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return as_scalar(Fraction(c))
    raise TypeError(f"inexact or unsupported coefficient {c!r}")


class VariableMismatch(ValueError):
    pass


class LaurentError(ValueError):
    """Operation requires a proper polynomial but found a negative exponent."""

    def __init__(self, message: str, monomial: Exponents | None = None):
        super().__init__(message)
        self.monomial = monomial


class NotDivisibleError(ArithmeticError):
    def __init__(self, remainder: "Polynomial"):
        super().__init__(f"not divisible; remainder {remainder}")
        self.remainder = remainder


class VariableSet:
    """Ordered tuple of distinct variable names."""

    __slots__ = ("names", "_index", "_hash")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise ValueError("a variable set needs at least one name")
        for n in names:
            if not isinstance(n, str) or not n:
                raise ValueError(f"bad variable name {n!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}
        self._hash = hash(names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r} (have {', '.join(self.names)})") from None

    def __contains__(self, name) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return isinstance(other, VariableSet) and self.names == other.names

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"VariableSet({', '.join(self.names)})"

    def extend(self, extra: Iterable[str]) -> "VariableSet":
        return VariableSet(self.names + tuple(e for e in extra if e not in self._index))

    def without(self, name: str) -> "VariableSet":
        return VariableSet(n for n in self.names if n != name)


def _vs(vars) -> VariableSet:
    return vars if isinstance(vars, VariableSet) else VariableSet(vars)


def term_key(weights: Mapping[str, int] | None, vars: VariableSet):
    """Sort key, larger is earlier in canonical order.

    Weighted degree (or total degree) first, then the exponent vector
    compared lexicographically in declared variable order.
    """
    if weights is None:
        return lambda e: (sum(e), e)
    w = tuple(weights[n] for n in vars.names)
    return lambda e: (sum(a * b for a, b in zip(w, e)), e)


class Polynomial:
    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars, terms: Mapping[Exponents, object] | None = None, _trusted: bool = False):
        self.vars = _vs(vars)
        self._hash = None
        if _trusted:
            self.terms = terms
            return
        n = len(self.vars)
        clean: dict[Exponents, Scalar] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(a) for a in e)
            if len(e) != n:
                raise ValueError(f"exponent vector {e} does not match arity {n}")
            c = as_scalar(c)
            if c:
                c = clean.get(e, 0) + c
                if c:
                    clean[e] = c
                else:
                    clean.pop(e, None)
        self.terms = clean

    # construction -----------------------------------------------------
    @classmethod
    def zero(cls, vars) -> "Polynomial":
        return cls(vars, {}, _trusted=True)

    @classmethod
    def constant(cls, vars, c) -> "Polynomial":
        vars = _vs(vars)
        c = as_scalar(c)
        return cls(vars, {(0,) * len(vars): c} if c else {}, _trusted=True)

    @classmethod
    def variable(cls, vars, name: str) -> "Polynomial":
        vars = _vs(vars)
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return cls(vars, {tuple(e): 1}, _trusted=True)

    @classmethod
    def monomial(cls, vars, exps: Mapping[str, int] | Exponents, coeff=1) -> "Polynomial":
        vars = _vs(vars)
        if isinstance(exps, Mapping):
            e = [0] * len(vars)
            for k, a in exps.items():
                e[vars.index(k)] = a
            exps = tuple(e)
        return cls(vars, {tuple(exps): coeff})

    @classmethod
    def gens(cls, vars) -> tuple["Polynomial", ...]:
        vars = _vs(vars)
        return tuple(cls.variable(vars, n) for n in vars)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.vars != self.vars:
                raise VariableMismatch(f"ambient {self.vars} vs {other.vars}")
            return other
        return Polynomial.constant(self.vars, other)

    # predicates and accessors -----------------------------------------
    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values())) if self.terms else 0

    def is_proper(self) -> bool:
        return all(a >= 0 for e in self.terms for a in e)

    def require_proper(self, what: str = "operation") -> None:
        for e in self.terms:
            if any(a < 0 for a in e):
                raise LaurentError(f"{what} needs a proper polynomial; found Laurent monomial {e}", e)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degree_in(self, name: str) -> int:
        """Largest exponent of ``name``; -1 for the zero polynomial."""
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def min_degree_in(self, name: str) -> int:
        i = self.vars.index(name)
        return min((e[i] for e in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def variables_present(self) -> tuple[str, ...]:
        used = [False] * len(self.vars)
        for e in self.terms:
            for i, a in enumerate(e):
                if a:
                    used[i] = True
        return tuple(n for n, u in zip(self.vars.names, used) if u)

    def coefficient(self, exps: Mapping[str, int] | Exponents) -> Scalar:
        if isinstance(exps, Mapping):
            e = [0] * len(self.vars)
            for k, a in exps.items():
                e[self.vars.index(k)] = a
            exps = tuple(e)
        return self.terms.get(tuple(exps), 0)

    def sorted_terms(self, weights: Mapping[str, int] | None = None) -> list[tuple[Exponents, Scalar]]:
        key = term_key(weights, self.vars)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self, weights: Mapping[str, int] | None = None) -> tuple[Exponents, Scalar]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = term_key(weights, self.vars)
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def leading_coefficient(self) -> Scalar:
        return self.leading_term()[1]

    # equality ----------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.vars == other.vars and self.terms == other.terms
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self.is_constant() and self.constant_value() == c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    # arithmetic --------------------------------------------------------
    def __neg__(self) -> "Polynomial":
        return Polynomial(self.vars, {e: -c for e, c in self.terms.items()}, _trusted=True)

    def __pos__(self) -> "Polynomial":
        return self

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for e, c in small.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return Polynomial(self.vars, _norm_all(out, small), _trusted=True)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def scale(self, c) -> "Polynomial":
        c = as_scalar(c)
        if not c:
            return Polynomial.zero(self.vars)
        if c == 1:
            return self
        return Polynomial(self.vars, {e: as_scalar(v * c) for e, v in self.terms.items()}, _trusted=True)

    def mul_monomial(self, exps: Exponents, c=1) -> "Polynomial":
        c = as_scalar(c)
        if not c:
            return Polynomial.zero(self.vars)
        return Polynomial(
            self.vars,
            {tuple(a + b for a, b in zip(e, exps)): as_scalar(v * c) for e, v in self.terms.items()},
            _trusted=True,
        )

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return Polynomial.zero(self.vars)
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (e, c), = b.items()
            return self.mul_monomial(e, c) if a is self.terms else other.mul_monomial(e, c)
        out: dict[Exponents, Scalar] = {}
        get = out.get
        items_a = list(a.items())
        fractional = False
        for eb, cb in b.items():
            for ea, ca in items_a:
                e = tuple([x + y for x, y in zip(ea, eb)])
                out[e] = get(e, 0) + ca * cb
        res = {}
        for e, c in out.items():
            if c:
                if isinstance(c, Fraction):
                    fractional = True
                res[e] = c
        if fractional:
            res = {e: as_scalar(c) for e, c in res.items()}
        return Polynomial(self.vars, res, _trusted=True)

    def __rmul__(self, other) -> "Polynomial":
        return self.scale(other)

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {n!r}")
        result = Polynomial.constant(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.is_constant() and not other.is_zero():
                return self.scale(Fraction(1) / Fraction(other.constant_value()))
            return divide_exact(self, other)
        return self.scale(Fraction(1) / Fraction(as_scalar(other)))

    # calculus and substitution -----------------------------------------
    def diff(self, name: str) -> "Polynomial":
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            a = e[i]
            if a:
                e2 = e[:i] + (a - 1,) + e[i + 1:]
                out[e2] = c * a
        return Polynomial(self.vars, out, _trusted=True)

    def evaluate(self, point: Mapping[str, object]) -> Scalar:
        vals = []
        for n in self.vars.names:
            if n not in point:
                raise KeyError(f"no value assigned to {n!r}")
            vals.append(as_scalar(point[n]))
        total: Scalar = 0
        for e, c in self.terms.items():
            t = c
            for v, a in zip(vals, e):
                if a:
                    t = t * (Fraction(v) ** a if a < 0 else v ** a)
            total += t
        return as_scalar(total)

    def subs(self, mapping: Mapping[str, object], clear: "Polynomial | None" = None, vars=None) -> "Polynomial":
        """Ring-homomorphic image; see :func:`lndkit.polycore.substitute`."""
        return substitute(self, mapping, clear=clear, vars=vars)

    def embed(self, vars) -> "Polynomial":
        """Same polynomial viewed over another ambient set containing its variables."""
        vars = _vs(vars)
        if vars == self.vars:
            return self
        pos = []
        for i, n in enumerate(self.vars.names):
            pos.append(vars.index(n) if n in vars else None)
        m = len(vars)
        out = {}
        for e, c in self.terms.items():
            new = [0] * m
            for i, a in enumerate(e):
                if a:
                    j = pos[i]
                    if j is None:
                        raise VariableMismatch(
                            f"variable {self.vars.names[i]!r} is used but absent from {vars}")
                    new[j] = a
            out[tuple(new)] = c
        return Polynomial(vars, out, _trusted=True)

    def coefficients_in(self, name: str) -> dict[int, "Polynomial"]:
        """Split into powers of ``name``; coefficients stay in the same ambient."""
        i = self.vars.index(name)
        parts: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[i]
            parts.setdefault(k, {})[e[:i] + (0,) + e[i + 1:]] = c
        return {k: Polynomial(self.vars, t, _trusted=True) for k, t in parts.items()}

    def coefficients_over(self, names: Iterable[str], coeff_vars=None) -> dict[Exponents, "Polynomial"]:
        """View as a polynomial in ``names`` with coefficients in the other variables.

        Returns exponent tuples over ``names`` mapped to coefficient
        polynomials, embedded in ``coeff_vars`` when given.
        """
        names = tuple(names)
        idx = [self.vars.index(n) for n in names]
        rest = [i for i in range(len(self.vars)) if i not in idx]
        parts: dict[Exponents, dict] = {}
        for e, c in self.terms.items():
            key = tuple(e[i] for i in idx)
            parts.setdefault(key, {})[tuple(e[i] for i in rest)] = c
        if not rest:
            cv = VariableSet(coeff_vars) if coeff_vars else None
            if cv is None:
                return {k: t[()] for k, t in parts.items()}  # type: ignore[return-value]
            return {k: Polynomial.constant(cv, t[()]) for k, t in parts.items()}
        inner = VariableSet(self.vars.names[i] for i in rest)
        out = {k: Polynomial(inner, t, _trusted=True) for k, t in parts.items()}
        if coeff_vars is not None:
            out = {k: p.embed(coeff_vars) for k, p in out.items()}
        return out

    @classmethod
    def from_coefficients(cls, coeffs: Mapping[int, "Polynomial"], name: str) -> "Polynomial":
        vars = None
        acc = None
        for k, c in coeffs.items():
            vars = c.vars
            e = [0] * len(vars)
            e[vars.index(name)] = k
            t = c.mul_monomial(tuple(e))
            acc = t if acc is None else acc + t
        if acc is None:
            raise ValueError("empty coefficient map needs an ambient")
        return acc

    def numeric_content(self) -> Fraction:
        """Positive rational c with self / c integral and primitive."""
        from math import gcd, lcm

        num = 0
        den = 1
        for c in self.terms.values():
            c = Fraction(c)
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den) if num else Fraction(1)

    def normalized(self) -> "Polynomial":
        """Integer primitive coefficients, positive leading coefficient."""
        if not self.terms:
            return self
        c = self.numeric_content()
        if self.leading_coefficient() < 0:
            c = -c
        return self.scale(1 / c)

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(Fraction(1) / Fraction(self.leading_coefficient()))

    def __repr__(self) -> str:
        return f"Polynomial({self}, vars={list(self.vars.names)})"

    def __str__(self) -> str:
        from .parser import format_polynomial

        return format_polynomial(self, allow_laurent=True)


def _norm_all(out, small):
    # adding an int to a Fraction may produce an integral Fraction
    if any(isinstance(c, Fraction) for c in small.values()):
        return {e: as_scalar(c) for e, c in out.items()}
    return out


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """Return q with f = q*g, or raise :class:`NotDivisibleError`.

    Multivariate division by leading terms under the graded order; the
    remainder reported on failure is the full normal form of f modulo g.
    """
    g = f._coerce(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    f.require_proper("divide_exact")
    g.require_proper("divide_exact")
    if g.is_constant():
        return f.scale(Fraction(1) / Fraction(g.constant_value()))
    key = term_key(None, f.vars)
    lg, cg = g.leading_term()
    cg_int = cg if isinstance(cg, int) else None
    cg = Fraction(cg)
    gt = [(e, c) for e, c in g.terms.items() if e != lg]
    p = dict(f.terms)
    q: dict[Exponents, Scalar] = {}
    rem: dict[Exponents, Scalar] = {}
    while p:
        lp = max(p, key=key)
        cp = p[lp]
        shift = tuple(a - b for a, b in zip(lp, lg))
        if any(s < 0 for s in shift):
            rem[lp] = cp
            del p[lp]
            continue
        if cg_int is not None and isinstance(cp, int) and cp % cg_int == 0:
            t = cp // cg_int
        else:
            t = as_scalar(Fraction(cp) / cg)
        q[shift] = t
        del p[lp]
        for e, c in gt:
            e2 = tuple(a + b for a, b in zip(e, shift))
            v = p.get(e2, 0) - c * t
            if v:
                p[e2] = as_scalar(v) if isinstance(v, Fraction) else v
            else:
                p.pop(e2, None)
    if rem:
        raise NotDivisibleError(Polynomial(f.vars, rem, _trusted=True))
    return Polynomial(f.vars, q, _trusted=True)


def substitute(f: Polynomial, mapping: Mapping[str, object], clear: Polynomial | None = None,
               vars=None) -> Polynomial:
    """Image of ``f`` under v -> mapping[v] (unmapped variables are fixed).

    Images may be Laurent monomials.  ``clear`` multiplies the image and the
    final result must be proper.  Without ``vars`` the target ambient is the
    common ambient of the images; unmapped variables of ``f`` that occur must
    exist there.
    """
    images: dict[str, Polynomial] = {}
    target = _vs(vars) if vars is not None else None
    for k, v in mapping.items():
        f.vars.index(k)
        if isinstance(v, Polynomial):
            if target is None:
                target = v.vars
            images[k] = v
    if target is None:
        target = clear.vars if clear is not None else f.vars
    for k, v in list(mapping.items()):
        if isinstance(v, Polynomial):
            if v.vars != target:
                images[k] = v.embed(target)
        else:
            images[k] = Polynomial.constant(target, v)
    for n in f.variables_present():
        if n not in images:
            images[n] = Polynomial.variable(target, n)
    result = _substitute_images(f, images, target)
    if clear is not None:
        result = result * (clear if clear.vars == target else clear.embed(target))
        result.require_proper("substitute (after clearing)")
    else:
        have_laurent_image = any(not im.is_proper() for im in images.values())
        if have_laurent_image or not f.is_proper():
            result.require_proper("substitute (no clearing given)")
    return result


def _substitute_images(f: Polynomial, images: dict[str, Polynomial], target: VariableSet) -> Polynomial:
    names = f.vars.names
    power_cache: dict[tuple[int, int], Polynomial] = {}

    def power(i: int, a: int) -> Polynomial:
        key = (i, a)
        if key not in power_cache:
            im = images[names[i]]
            if a < 0:
                if not im.is_monomial():
                    raise LaurentError(f"negative power of non-monomial image for {names[i]!r}")
                (e, c), = im.terms.items()
                power_cache[key] = Polynomial(target, {tuple(x * a for x in e): as_scalar(Fraction(c) ** a)},
                                              _trusted=True)
            elif a == 0:
                power_cache[key] = Polynomial.constant(target, 1)
            elif a == 1:
                power_cache[key] = im
            else:
                power_cache[key] = power(i, a - 1) * im
        return power_cache[key]

    acc: dict[Exponents, Scalar] = {}
    for e, c in f.terms.items():
        t = Polynomial.constant(target, c)
        for i, a in enumerate(e):
            if a:
                t = t * power(i, a)
                if t.is_zero():
                    break
        for e2, c2 in t.terms.items():
            v = acc.get(e2, 0) + c2
            if v:
                acc[e2] = v
            else:
                acc.pop(e2, None)
    return Polynomial(target, {e: as_scalar(c) for e, c in acc.items()}, _trusted=True)
