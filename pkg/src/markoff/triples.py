"""Markoff triples, Vieta neighbours and descent to the root (1, 1, 1)."""
from __future__ import annotations

from math import gcd
from typing import FrozenSet, List, NamedTuple


class NotMarkoffError(ValueError):
    """Raised when a triple does not satisfy a^2 + b^2 + c^2 = 3abc."""

    def __init__(self, a: int, b: int, c: int):
        self.triple = (a, b, c)
        self.lhs = a * a + b * b + c * c
        self.rhs = 3 * a * b * c
        super().__init__(
            f"({a}, {b}, {c}) is not a Markoff triple: "
            f"a^2+b^2+c^2 = {self.lhs} but 3abc = {self.rhs}"
        )


class MarkoffTriple(NamedTuple):
    """Ascending-sorted solution of a^2 + b^2 + c^2 = 3abc.

    Build through :func:`make_triple`; the constructor itself does no
    validation so that internal code can skip the re-check.
    """

    a: int
    b: int
    c: int

    @property
    def is_singular(self) -> bool:
        return self.c <= 2

    def satisfies_equation(self) -> bool:
        a, b, c = self
        return a * a + b * b + c * c == 3 * a * b * c

    def is_pairwise_coprime(self) -> bool:
        a, b, c = self
        return gcd(a, b) == 1 and gcd(b, c) == 1 and gcd(a, c) == 1

    def conjugate_of_max(self) -> int:
        """c' = 3ab - c, the other root of the equation as a quadratic in c."""
        return 3 * self.a * self.b - self.c

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


ROOT = MarkoffTriple(1, 1, 1)
SINGULAR = frozenset({MarkoffTriple(1, 1, 1), MarkoffTriple(1, 1, 2)})


def _sorted(x: int, y: int, z: int) -> MarkoffTriple:
    if x > y:
        x, y = y, x
    if y > z:
        y, z = z, y
        if x > y:
            x, y = y, x
    return MarkoffTriple(x, y, z)


def make_triple(a: int, b: int, c: int) -> MarkoffTriple:
    if min(a, b, c) < 1:
        raise ValueError(f"elements must be positive, got ({a}, {b}, {c})")
    t = _sorted(a, b, c)
    if not t.satisfies_equation():
        raise NotMarkoffError(*t)
    return t


def neighbors(t: MarkoffTriple) -> FrozenSet[MarkoffTriple]:
    a, b, c = t
    return frozenset({
        _sorted(3 * b * c - a, b, c),
        _sorted(a, 3 * c * a - b, c),
        _sorted(a, b, 3 * a * b - c),
    })


def children(t: MarkoffTriple) -> List[MarkoffTriple]:
    """Neighbours whose largest element exceeds that of ``t``."""
    return sorted(u for u in neighbors(t) if u.c > t.c)


def reduce_step(t: MarkoffTriple) -> MarkoffTriple:
    a, b, c = t
    return _sorted(a, b, 3 * a * b - c)


def reduce_to_root(t: MarkoffTriple) -> List[MarkoffTriple]:
    """The descent path from ``t`` down to (1, 1, 1), both ends included."""
    path = [t]
    while t != ROOT:
        nxt = reduce_step(t)
        if not t.is_singular and nxt.c >= t.c:
            # cannot happen for a genuine Markoff triple
            raise RuntimeError(f"descent stalled at {t} -> {nxt}")
        t = nxt
        path.append(t)
    return path


def check_lemma3(t: MarkoffTriple) -> bool:
    """Check the growth bounds c > 2ab and b > 2c'a, where c' = 3ab - c.

    Only defined for a < b < c and t != (1, 2, 5).
    """
    a, b, c = t
    if not a < b < c:
        raise ValueError(f"{t} is singular; the growth bounds need a < b < c")
    if t == (1, 2, 5):
        raise ValueError("(1, 2, 5) is excluded from the growth bounds")
    c_prime = 3 * a * b - c
    return c > 2 * a * b and b > 2 * c_prime * a
