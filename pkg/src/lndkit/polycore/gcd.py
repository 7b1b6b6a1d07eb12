"""Multivariate GCD by recursive primitive pseudo-remainder sequences."""

from __future__ import annotations

from .polynomial import Polynomial


def _main_variable(*polys: Polynomial) -> str | None:
    vars = polys[0].vars
    present = set()
    for p in polys:
        present.update(p.variables_present())
    for n in vars.names:
        if n in present:
            return n
    return None


def _one(vars) -> Polynomial:
    return Polynomial.constant(vars, 1)


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Normalized GCD: integer primitive coefficients, positive leading term.

    gcd(0, 0) is 0.  Constants have GCD 1 (coefficients live in a field).
    """
    g = f._coerce(g)
    if f.is_zero():
        return g.normalized()
    if g.is_zero():
        return f.normalized()
    f.require_proper("gcd")
    g.require_proper("gcd")
    v = _main_variable(f, g)
    if v is None:
        return _one(f.vars)
    if f.degree_in(v) == 0:
        return gcd(f, content(g, v))
    if g.degree_in(v) == 0:
        return gcd(content(f, v), g)
    cf = content(f, v)
    cg = content(g, v)
    c = gcd(cf, cg)
    pf = _exact(f, cf)
    pg = _exact(g, cg)
    h = _primitive_prs(pf, pg, v)
    return (c * h).normalized()


def gcd_many(polys) -> Polynomial:
    polys = list(polys)
    acc = Polynomial.zero(polys[0].vars)
    for p in polys:
        acc = gcd(acc, p)
        if acc.is_constant() and not acc.is_zero():
            break
    return acc


def content(f: Polynomial, v: str) -> Polynomial:
    """Normalized GCD of the coefficients of ``f`` viewed in (others)[v]."""
    coeffs = sorted(f.coefficients_in(v).values(), key=len)
    return gcd_many(coeffs)


def primitive_part(f: Polynomial, v: str) -> Polynomial:
    if f.is_zero():
        return f
    return _exact(f, content(f, v)).normalized()


def _exact(f: Polynomial, c: Polynomial) -> Polynomial:
    from .polynomial import divide_exact

    if c.is_constant():
        return f.scale(1 / c.constant_value()) if c.constant_value() != 1 else f
    return divide_exact(f, c)


def lc_in(f: Polynomial, v: str) -> Polynomial:
    cs = f.coefficients_in(v)
    return cs[max(cs)]


def pseudo_remainder(a: Polynomial, b: Polynomial, v: str) -> Polynomial:
    """prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b, in the variable v."""
    db = b.degree_in(v)
    if db < 0:
        raise ZeroDivisionError("pseudo-remainder by zero")
    lb = lc_in(b, v)
    i = a.vars.index(v)
    e = a.degree_in(v) - db + 1
    r = a
    while not r.is_zero() and r.degree_in(v) >= db:
        d = r.degree_in(v)
        shift = [0] * len(a.vars)
        shift[i] = d - db
        r = lb * r - (lc_in(r, v) * b).mul_monomial(tuple(shift))
        e -= 1
    if e > 0:
        r = r * lb ** e
    return r


def _primitive_prs(a: Polynomial, b: Polynomial, v: str) -> Polynomial:
    if a.degree_in(v) < b.degree_in(v):
        a, b = b, a
    while not b.is_zero():
        if b.degree_in(v) == 0:
            return _one(a.vars)
        r = pseudo_remainder(a, b, v)
        a, b = b, primitive_part(r, v) if not r.is_zero() else r
    if a.degree_in(v) <= 0:
        return _one(a.vars)
    return primitive_part(a, v)


def content_and_primitive(f: Polynomial, v: str) -> tuple[Polynomial, Polynomial]:
    """Split ``f = content * primitive`` with respect to the variable ``v``."""
    if f.is_zero():
        raise ValueError("content of the zero polynomial is undefined")
    f.vars.index(v)
    c = content(f, v)
    return c, _exact(f, c)
