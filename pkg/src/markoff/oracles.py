"""Exhaustive brute-force checks, kept independent of the tree walk.

None of these use the results they are meant to confirm: the triple scan
tests the Markoff equation directly, and the root counter searches every x.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import List, Tuple

from . import kernels
from .arith import PrimePowerKind, classify_two_adic
from .triples import MarkoffTriple


def brute_force_triples(bound: int) -> List[MarkoffTriple]:
    """All Markoff triples with max <= bound, found without the tree, sorted by (c, b, a)."""
    found = (MarkoffTriple(*t) for t in kernels.brute_force_triples(bound))
    return sorted(found, key=lambda t: (t.c, t.b, t.a))


def is_lemma2_modulus(m: int) -> bool:
    """True when m = p^n or 2p^n for an odd prime p and n >= 1."""
    if m < 3:
        return False
    return classify_two_adic(m).kind in (PrimePowerKind.PURE, PrimePowerKind.TWO)


@dataclass(frozen=True)
class QuadraticRootCount:
    m: int
    r: int
    solutions: Tuple[int, ...]


def count_quadratic_roots(m: int, r: int) -> QuadraticRootCount:
    """All x with 0 < x < m/2 and x^2 + r divisible by m, by trying each x."""
    if not is_lemma2_modulus(m):
        raise ValueError(f"m = {m} is not p^n or 2p^n for an odd prime p")
    if gcd(r, m) != 1:
        raise ValueError(f"r = {r} is not coprime to m = {m}")
    sols = tuple(x for x in range(1, (m + 1) // 2) if (x * x + r) % m == 0)
    return QuadraticRootCount(m, r, sols)


@dataclass
class SweepSummary:
    name: str
    bound: int
    cases: int = 0
    checks: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def sweep_lemma2(max_m: int) -> SweepSummary:
    """At most one root in (0, m/2) for every admissible m <= max_m and coprime r.

    ``cases`` counts moduli, ``checks`` counts (m, r) pairs.
    """
    if max_m < 3:
        raise ValueError(f"max_m must be >= 3, got {max_m}")
    summary = SweepSummary("lemma2", max_m)
    for m in range(3, max_m + 1):
        if not is_lemma2_modulus(m):
            continue
        summary.cases += 1
        counts = kernels.lemma2_root_counts(m)
        for r in range(1, m):
            if gcd(r, m) != 1:
                continue
            summary.checks += 1
            if counts[r] > 1:
                summary.violations.append(count_quadratic_roots(m, r))
    return summary


def sweep_lemma1(max_xy: int) -> SweepSummary:
    """Every odd divisor of x^2 + y^2 is 1 mod 4, for coprime 1 <= x <= y <= max_xy.

    ``cases`` counts pairs, ``checks`` counts odd divisors examined.
    """
    if max_xy < 1:
        raise ValueError(f"max_xy must be >= 1, got {max_xy}")
    pairs, divisors, violations = kernels.lemma1_scan(max_xy)
    return SweepSummary("lemma1", max_xy, pairs, divisors, list(violations))


def odd_divisors(n: int) -> List[int]:
    """Odd divisors of n in ascending order, by trial division with pairing."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return [d for d in small + large[::-1] if d % 2]


def rewrite_sides(t: MarkoffTriple) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """Both sides of (a-b)^2 + c^2 = ab(3c-2) and of (a+b)^2 + c^2 = ab(3c+2)."""
    a, b, c = t
    return (
        ((a - b) ** 2 + c * c, a * b * (3 * c - 2)),
        ((a + b) ** 2 + c * c, a * b * (3 * c + 2)),
    )


def check_rewrites(t: MarkoffTriple) -> bool:
    return all(lhs == rhs for lhs, rhs in rewrite_sides(t))


def sweep_rewrites(triples) -> SweepSummary:
    summary = SweepSummary("rewrites", max((t.c for t in triples), default=0))
    for t in triples:
        summary.cases += 1
        summary.checks += 2
        if not check_rewrites(t):
            summary.violations.append(t)
    return summary

