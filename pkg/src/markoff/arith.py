"""Exact integer utilities: primality, integer roots and prime-power forms.

Everything here works on Python ints, so there is no overflow at any size.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Optional, Tuple

# Miller-Rabin with the primes up to 41 as witnesses is exact for every n
# below this bound, which is itself the least strong pseudoprime to all of
# them (Sorenson & Webster, 2015). Dropping 41 lowers the bound to
# 318665857834031151167461.
DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
DETERMINISTIC_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
DEFAULT_ROUNDS = 32

_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97,
)


def _strong_probable_prime(n: int, d: int, s: int, base: int) -> bool:
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(m: int, rounds: Optional[int] = None) -> bool:
    """Miller-Rabin primality test.

    Exact for ``m < DETERMINISTIC_LIMIT``. Above that, ``rounds`` bases are
    drawn from a generator seeded by ``m`` (so results are reproducible), and
    a composite slips through with probability at most ``4**-rounds``.
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    if m < 2:
        return False
    for p in _SMALL_PRIMES:
        if m % p == 0:
            return m == p
    if m < _SMALL_PRIMES[-1] ** 2:
        return True

    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    if m < DETERMINISTIC_LIMIT:
        bases = DETERMINISTIC_WITNESSES
    else:
        rng = random.Random(m)
        k = DEFAULT_ROUNDS if rounds is None else rounds
        if k < 1:
            raise ValueError(f"rounds must be positive, got {k}")
        bases = [rng.randrange(2, m - 1) for _ in range(k)]
    return all(_strong_probable_prime(m, d, s, a) for a in bases)


def integer_nth_root(m: int, k: int) -> int:
    """Return the largest r with r**k <= m."""
    if k < 1:
        raise ValueError(f"root index must be >= 1, got {k}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if k == 1:
        return m
    # Newton from above: start at a power of two that is >= the root.
    x = 1 << -(-m.bit_length() // k)
    while True:
        y = ((k - 1) * x + m // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def prime_power_decompose(m: int, rounds: Optional[int] = None) -> Optional[Tuple[int, int]]:
    """Return ``(p, n)`` with p prime and ``p**n == m``, or None."""
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    for k in range(m.bit_length() - 1, 0, -1):
        r = integer_nth_root(m, k)
        if r >= 2 and r ** k == m and is_probable_prime(r, rounds):
            return r, k
    return None


class PrimePowerKind(enum.Enum):
    PURE = "PurePn"
    TWO = "TwoPn"
    FOUR = "FourPn"
    EIGHT = "EightPn"
    NONE = "None"

    @property
    def two_exponent(self) -> Optional[int]:
        return _TWO_EXPONENT.get(self)


_TWO_EXPONENT = {
    PrimePowerKind.PURE: 0,
    PrimePowerKind.TWO: 1,
    PrimePowerKind.FOUR: 2,
    PrimePowerKind.EIGHT: 3,
}
_KIND_BY_EXPONENT = {e: kind for kind, e in _TWO_EXPONENT.items()}


@dataclass(frozen=True)
class PrimePowerForm:
    """``2**e * p**n`` with odd prime p and e in 0..3, or no such form."""

    kind: PrimePowerKind
    p: Optional[int] = None
    n: Optional[int] = None

    def __bool__(self) -> bool:
        return self.kind is not PrimePowerKind.NONE

    def value(self) -> int:
        if not self:
            raise ValueError("a NONE form has no value")
        return (1 << self.kind.two_exponent) * self.p ** self.n

    def __str__(self) -> str:
        if not self:
            return "none"
        return f"2^{self.kind.two_exponent}*{self.p}^{self.n}"


NO_FORM = PrimePowerForm(PrimePowerKind.NONE)


def two_adic_split(m: int) -> Tuple[int, int]:
    """Write m = 2**e * q with q odd; return (e, q)."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    e = (m & -m).bit_length() - 1
    return e, m >> e


def classify_two_adic(m: int, rounds: Optional[int] = None) -> PrimePowerForm:
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    e, q = two_adic_split(m)
    if e > 3 or q < 3:
        return NO_FORM
    found = prime_power_decompose(q, rounds)
    if found is None:
        return NO_FORM
    p, n = found
    return PrimePowerForm(_KIND_BY_EXPONENT[e], p, n)
