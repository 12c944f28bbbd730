# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the brute-force loops in :mod:`markoff._pykernels`.

Same signatures and results; inputs are range-checked so that every
intermediate fits in a signed 64-bit integer.
"""

from libc.stdlib cimport calloc, free

# 3 * B**3 must stay below 2**63.
MAX_TRIPLE_BOUND = 1 << 20
# (x^2 + y^2) and x*x for x < m must fit comfortably.
MAX_MODULUS = 1 << 31
MAX_XY = 1 << 30


def brute_force_triples(long long bound):
    """Every (a, b, c) with a <= b <= c <= bound and a^2 + b^2 + c^2 = 3abc.

    Plain triple loop. The only shortcut is stopping c at 3ab, past which
    c^2 alone already exceeds 3abc.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    if bound > MAX_TRIPLE_BOUND:
        raise OverflowError(f"bound {bound} too large for the compiled kernel")
    cdef long long a, b, c, ab3, s, top
    out = []
    for a in range(1, bound + 1):
        for b in range(a, bound + 1):
            ab3 = 3 * a * b
            s = a * a + b * b
            top = bound if bound < ab3 else ab3
            c = b
            while c <= top:
                if s + c * c == ab3 * c:
                    out.append((a, b, c))
                c += 1
    return out


def lemma2_root_counts(long long m):
    """counts[r] = #{x : 0 < 2x < m, x^2 + r == 0 (mod m)} for every r in [0, m)."""
    if m < 2 or m > MAX_MODULUS:
        raise ValueError(f"modulus out of range: {m}")
    cdef long long x, r
    cdef int *counts = <int *> calloc(m, sizeof(int))
    if counts == NULL:
        raise MemoryError()
    try:
        x = 1
        while 2 * x < m:
            r = (m - (x * x) % m) % m
            counts[r] += 1
            x += 1
        return [counts[r] for r in range(m)]
    finally:
        free(counts)


cdef long long _gcd(long long u, long long v) nogil:
    while v:
        u, v = v, u % v
    return u


def lemma1_scan(long long max_xy):
    """Check odd divisors of x^2 + y^2 for all coprime 1 <= x <= y <= max_xy.

    Returns (pairs_checked, divisors_checked, violations) where each
    violation is (x, y, d) with d an odd divisor and d % 4 != 1.
    """
    if max_xy < 1 or max_xy > MAX_XY:
        raise ValueError(f"max_xy out of range: {max_xy}")
    cdef long long x, y, n, d, q, pairs = 0, divisors = 0
    violations = []
    for x in range(1, max_xy + 1):
        for y in range(x, max_xy + 1):
            if _gcd(x, y) != 1:
                continue
            pairs += 1
            n = x * x + y * y
            d = 1
            while d * d <= n:
                if n % d == 0:
                    q = n // d
                    if d & 1:
                        divisors += 1
                        if d % 4 != 1:
                            violations.append((x, y, d))
                    if q != d and q & 1:
                        divisors += 1
                        if q % 4 != 1:
                            violations.append((x, y, q))
                d += 1
    return pairs, divisors, violations
