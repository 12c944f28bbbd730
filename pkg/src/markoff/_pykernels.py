"""Pure-Python fallbacks for the compiled kernels in ``_ckernels.pyx``.

The triple search here solves for c from the quadratic formula instead of
looping over it; everything else mirrors the compiled loops line for line.
"""
from __future__ import annotations

from math import gcd, isqrt
from typing import List, Tuple


def brute_force_triples(bound: int) -> List[Tuple[int, int, int]]:
    """Every (a, b, c) with a <= b <= c <= bound and a^2 + b^2 + c^2 = 3abc.

    For each pair a <= b the equation is a quadratic in c; both integer
    candidates are then checked against the equation itself.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    out = []
    for a in range(1, bound + 1):
        for b in range(a, bound + 1):
            ab3 = 3 * a * b
            disc = ab3 * ab3 - 4 * (a * a + b * b)
            if disc < 0:
                continue
            s = isqrt(disc)
            if s * s != disc:
                continue
            for c in sorted({(ab3 - s) // 2, (ab3 + s) // 2}):
                if b <= c <= bound and a * a + b * b + c * c == ab3 * c:
                    out.append((a, b, c))
    return out


def naive_triples(bound: int) -> List[Tuple[int, int, int]]:
    """The literal triple loop; only practical for small bounds."""
    return [
        (a, b, c)
        for a in range(1, bound + 1)
        for b in range(a, bound + 1)
        for c in range(b, bound + 1)
        if a * a + b * b + c * c == 3 * a * b * c
    ]


def lemma2_root_counts(m: int) -> List[int]:
    if m < 2:
        raise ValueError(f"modulus out of range: {m}")
    counts = [0] * m
    x = 1
    while 2 * x < m:
        counts[-(x * x) % m] += 1
        x += 1
    return counts


def lemma1_scan(max_xy: int) -> Tuple[int, int, List[Tuple[int, int, int]]]:
    if max_xy < 1:
        raise ValueError(f"max_xy out of range: {max_xy}")
    pairs = divisors = 0
    violations = []
    for x in range(1, max_xy + 1):
        for y in range(x, max_xy + 1):
            if gcd(x, y) != 1:
                continue
            pairs += 1
            n = x * x + y * y
            for d in range(1, isqrt(n) + 1):
                if n % d:
                    continue
                q = n // d
                if d & 1:
                    divisors += 1
                    if d % 4 != 1:
                        violations.append((x, y, d))
                if q != d and q & 1:
                    divisors += 1
                    if q % 4 != 1:
                        violations.append((x, y, q))
    return pairs, divisors, violations
