"""Text form of polynomials.

Grammar (whitespace ignored)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := uint | uint '/' uint | variable | '(' expr ')'

Juxtaposition is rejected, so ``2x`` and ``xy`` are errors (the latter is a
single unknown identifier).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping

from .polynomial import Polynomial, VariableSet, _vs, as_scalar, term_key


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class UnknownVariableError(ValueError):
    def __init__(self, name: str, position: int):
        super().__init__(f"unknown variable {name!r} at position {position}")
        self.name = name
        self.position = position


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<id>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    toks = []
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    toks.append(("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str, vars: VariableSet):
        self.text = text
        self.vars = vars
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value or kind not in ("op",):
            raise PolynomialSyntaxError(f"expected {value!r}, found {val or 'end of input'!r}", pos, self.text)

    def fail(self, what: str):
        kind, val, pos = self.peek()
        found = "end of input" if kind == "end" else repr(val)
        raise PolynomialSyntaxError(f"expected {what}, found {found}", pos, self.text)

    def parse(self) -> Polynomial:
        p = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            if kind in ("id", "num") or val == "(":
                raise PolynomialSyntaxError("juxtaposition is not allowed; use '*'", pos, self.text)
            raise PolynomialSyntaxError(f"unexpected {val!r}", pos, self.text)
        return p

    def expr(self) -> Polynomial:
        negate = False
        if self.peek()[1] == "-" and self.peek()[0] == "op":
            self.take()
            negate = True
        acc = self.term()
        if negate:
            acc = -acc
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        b = self.base()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            kind, val, pos = self.peek()
            if kind != "num":
                raise PolynomialSyntaxError("exponent must be a nonnegative integer literal", pos, self.text)
            self.take()
            b = b ** int(val)
        return b

    def base(self) -> Polynomial:
        kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                k2, v2, p2 = self.peek()
                if k2 != "num":
                    raise PolynomialSyntaxError("expected integer denominator", p2, self.text)
                self.take()
                if int(v2) == 0:
                    raise PolynomialSyntaxError("zero denominator", p2, self.text)
                return Polynomial.constant(self.vars, Fraction(int(val), int(v2)))
            return Polynomial.constant(self.vars, int(val))
        if kind == "id":
            self.take()
            if val not in self.vars:
                raise UnknownVariableError(val, pos)
            return Polynomial.variable(self.vars, val)
        if kind == "op" and val == "(":
            self.take()
            inner = self.expr()
            k2, v2, p2 = self.peek()
            if v2 != ")":
                self.fail("')'")
            self.take()
            return inner
        self.fail("a number, variable or '('")


def parse_polynomial(text: str, vars) -> Polynomial:
    """Parse ``text`` into a canonical polynomial over ``vars``."""
    return _Parser(text, _vs(vars)).parse()


def identifiers(text: str) -> list[str]:
    """Variable names in order of first appearance (for inferring an ambient)."""
    seen: list[str] = []
    for kind, val, _ in _tokenize(text):
        if kind == "id" and val not in seen:
            seen.append(val)
    return seen


def _format_coeff(c) -> str:
    c = as_scalar(c)
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def _format_monomial(e, names) -> str:
    parts = []
    for n, a in zip(names, e):
        if a == 1:
            parts.append(n)
        elif a:
            parts.append(f"{n}^{a}")
    return "*".join(parts)


def format_polynomial(f: Polynomial, weights: Mapping[str, int] | None = None,
                      allow_laurent: bool = False) -> str:
    if not allow_laurent:
        f.require_proper("format_canonical")
    if f.is_zero():
        return "0"
    names = f.vars.names
    out = []
    for i, (e, c) in enumerate(f.sorted_terms(weights)):
        neg = c < 0
        mag = -c if neg else c
        mono = _format_monomial(e, names)
        if not mono:
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coeff(mag)}*{mono}"
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def format_canonical(f: Polynomial, weights: Mapping[str, int] | None = None) -> str:
    """Deterministic text that :func:`parse_polynomial` maps back to ``f``.

    Terms run by weighted degree (total degree without weights), highest
    first, ties broken by descending exponent vectors in variable order.
    """
    return format_polynomial(f, weights)


__all__ = [
    "PolynomialSyntaxError", "UnknownVariableError", "parse_polynomial",
    "format_canonical", "identifiers", "term_key",
]
