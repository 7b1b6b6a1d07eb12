"""Weighted N-gradings of polynomial rings and two-generator semigroup arithmetic."""

from __future__ import annotations

from collections.abc import Mapping
from math import gcd
from typing import Callable, Iterator

from .polycore import Polynomial, VariableSet


class Weights(Mapping):
    """Positive integer weight for each variable name."""

    def __init__(self, weights: Mapping[str, int] | None = None, **kw: int):
        data = dict(weights or {}, **kw)
        for k, w in data.items():
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise ValueError(f"weight of {k!r} must be a positive integer, got {w!r}")
        self._w = data

    @classmethod
    def parse(cls, text: str) -> "Weights":
        """Read ``x=3,y=2,z=1``."""
        out = {}
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            name, sep, val = part.partition("=")
            if not sep:
                raise ValueError(f"expected name=weight, got {part!r}")
            name = name.strip()
            if not name:
                raise ValueError(f"missing variable name in {part!r}")
            if name in out:
                raise ValueError(f"weight for {name!r} given twice")
            try:
                out[name] = int(val)
            except ValueError:
                raise ValueError(f"weight of {name!r} is not an integer: {val!r}") from None
        return cls(out)

    def __getitem__(self, k: str) -> int:
        return self._w[k]

    def __iter__(self) -> Iterator[str]:
        return iter(self._w)

    def __len__(self) -> int:
        return len(self._w)

    def __repr__(self) -> str:
        return "Weights(" + ", ".join(f"{k}={v}" for k, v in self._w.items()) + ")"

    def __str__(self) -> str:
        return ",".join(f"{k}={v}" for k, v in self._w.items())

    def variables(self) -> VariableSet:
        return VariableSet(self._w)

    def covers(self, vars: VariableSet) -> None:
        missing = [n for n in vars if n not in self._w]
        if missing:
            raise ValueError(f"no weight for {', '.join(missing)}")

    def of(self, exps, vars: VariableSet) -> int:
        return sum(self._w[n] * a for n, a in zip(vars.names, exps))


QUINTIC_WEIGHTS = Weights(x=3, y=2, z=1)
SEXTIC_WEIGHTS = Weights(u=5, x=3, y=2, z=1)

MINUS_INFINITY = float("-inf")


def _weight_list(w: Mapping[str, int], vars: VariableSet) -> list[int]:
    missing = [n for n in vars if n not in w]
    if missing:
        raise ValueError(f"no weight for {', '.join(missing)}")
    return [w[n] for n in vars.names]


def weighted_degree(f: Polynomial, w: Mapping[str, int]) -> tuple[int, bool]:
    """(max weighted degree over the terms, whether all terms share it).

    The zero polynomial raises; its degree is conventionally -infinity,
    exported as :data:`MINUS_INFINITY`.
    """
    if f.is_zero():
        raise ValueError("weighted degree of 0 is -infinity")
    f.require_proper("weighted_degree")
    ws = _weight_list(w, f.vars)
    degs = {sum(a * b for a, b in zip(ws, e)) for e in f.terms}
    return max(degs), len(degs) == 1


def is_homogeneous(f: Polynomial, w: Mapping[str, int]) -> bool:
    return f.is_zero() or weighted_degree(f, w)[1]


def homogeneous_components(f: Polynomial, w: Mapping[str, int]) -> list[tuple[int, Polynomial]]:
    f.require_proper("homogeneous_components")
    ws = _weight_list(w, f.vars)
    parts: dict[int, dict] = {}
    for e, c in f.terms.items():
        parts.setdefault(sum(a * b for a, b in zip(ws, e)), {})[e] = c
    return [(d, Polynomial(f.vars, parts[d])) for d in sorted(parts)]


def monomial_basis(d: int, w: Mapping[str, int], vars=None) -> list[tuple[int, ...]]:
    """Exponent vectors of weighted degree exactly ``d``, canonical order.

    Variable order is that of ``vars`` (default: iteration order of ``w``).
    """
    vars = VariableSet(vars if vars is not None else list(w))
    ws = [w[n] for n in vars.names]
    out: list[tuple[int, ...]] = []

    def rec(i: int, left: int, acc: list[int]) -> None:
        if i == len(ws) - 1:
            if left % ws[i] == 0:
                out.append(tuple(acc + [left // ws[i]]))
            return
        for a in range(left // ws[i], -1, -1):
            rec(i + 1, left - a * ws[i], acc + [a])

    if d >= 0:
        rec(0, d, [])
    # lexicographically descending already; every entry has the same weighted degree
    return out


def basis_polynomials(d: int, w: Mapping[str, int], vars=None) -> list[Polynomial]:
    vars = VariableSet(vars if vars is not None else list(w))
    return [Polynomial(vars, {e: 1}) for e in monomial_basis(d, w, vars)]


def degree_equation_solutions(m: int, n: int, target: int) -> list[tuple[int, int]]:
    """All (i, j) in N^2 with m*i + n*j = target, lexicographic."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    return [(i, (target - m * i) // n) for i in range(0, max(target, -1) // m + 1)
            if (target - m * i) >= 0 and (target - m * i) % n == 0]


def frobenius(m: int, n: int) -> tuple[int, Callable[[int], bool]]:
    """Frobenius number of mN + nN with a membership predicate."""
    if m < 2 or n < 2:
        raise ValueError("generators must be at least 2")
    if gcd(m, n) != 1:
        raise ValueError(f"gcd({m}, {n}) != 1")
    number = m * n - m - n

    def member(t: int) -> bool:
        if t < 0:
            return False
        if t > number:
            return True
        # t = m*i + n*j needs n*j = t (mod m) for some 0 <= j < m
        return any((t - n * j) >= 0 and (t - n * j) % m == 0 for j in range(m))

    return number, member
