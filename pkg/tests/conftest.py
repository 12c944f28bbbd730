from math import isqrt

import pytest


def trial_division_factor(n):
    """{prime: exponent} for n >= 2, by plain trial division."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime_trial(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


def prime_table(limit):
    """Sieve of Eratosthenes: flags[n] is True iff n is prime."""
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return flags


@pytest.fixture(scope="session")
def report_1e6():
    from markoff import enumerate_up_to

    return enumerate_up_to(10**6)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, title, elapsed, note = RESULTS[n]
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {n:2d}: {title} ({elapsed:.3f}s)"
        if note:
            line += f" -- {note}"
        terminalreporter.write_line(line)
