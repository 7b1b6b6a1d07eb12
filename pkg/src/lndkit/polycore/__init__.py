"""Exact sparse polynomial substrate: arithmetic, parsing, printing."""

from __future__ import annotations

from .gcd import content_and_primitive, gcd, gcd_many, pseudo_remainder
from .parser import (
    PolynomialSyntaxError,
    UnknownVariableError,
    format_canonical,
    identifiers,
    parse_polynomial,
)
from .polynomial import (
    LaurentError,
    NotDivisibleError,
    Polynomial,
    VariableMismatch,
    VariableSet,
    as_scalar,
    divide_exact,
    substitute,
)

_OPS = {
    "add": lambda f, g: f + g,
    "sub": lambda f, g: f - g,
    "mul": lambda f, g: f * g,
    "neg": lambda f, g=None: -f,
    "pow": lambda f, n: f ** n,
}


def arith(op: str, f: Polynomial, g=None) -> Polynomial:
    """Dispatch one of add/sub/mul/neg/pow by name."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    if op == "neg":
        return fn(f)
    if op == "pow":
        if not isinstance(g, int) or isinstance(g, bool) or g < 0:
            raise ValueError("pow needs a nonnegative integer exponent")
        return fn(f, g)
    if not isinstance(g, Polynomial):
        raise TypeError(f"{op} needs a polynomial operand")
    return fn(f, g)


def partial_derivative(f: Polynomial, v: str) -> Polynomial:
    f.require_proper("partial_derivative")
    return f.diff(v)


def evaluate(f: Polynomial, point) -> object:
    f.require_proper("evaluate")
    return f.evaluate(point)


__all__ = [
    "Polynomial", "VariableSet", "LaurentError", "NotDivisibleError", "VariableMismatch",
    "PolynomialSyntaxError", "UnknownVariableError",
    "parse_polynomial", "format_canonical", "identifiers", "arith", "partial_derivative",
    "substitute", "evaluate", "divide_exact", "content_and_primitive", "gcd", "gcd_many",
    "pseudo_remainder", "as_scalar",
]
