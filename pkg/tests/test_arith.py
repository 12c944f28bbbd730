import pytest
from hypothesis import given, strategies as st

from markoff.arith import (
    DETERMINISTIC_LIMIT,
    PrimePowerForm,
    PrimePowerKind,
    classify_two_adic,
    integer_nth_root,
    is_probable_prime,
    prime_power_decompose,
)

from conftest import is_prime_trial, prime_table, trial_division_factor


@pytest.mark.parametrize("m, expected", [(0, False), (1, False), (2, True), (3, True), (4, False),
                                         (100, False), (457, True), (229, True), (97, True)])
def test_is_probable_prime_examples(m, expected):
    assert is_probable_prime(m) is expected
    assert is_prime_trial(m) is expected


def test_is_probable_prime_matches_sieve_to_one_million():
    flags = prime_table(10**6)
    mismatches = [m for m in range(10**6 + 1) if is_probable_prime(m) != bool(flags[m])]
    assert mismatches == []


@pytest.mark.parametrize("n", [
    561, 1105, 1729, 2465, 41041, 825265,   # Carmichael numbers
    2047, 1373653, 25326001, 3215031751,    # strong pseudoprimes to the first few bases
    2152302898747, 3474749660383, 341550071728321,
    3825123056546413051,
    318665857834031151167461,               # strong pseudoprime to every prime base 2..37
])
def test_rejects_known_pseudoprimes(n):
    assert not is_probable_prime(n)


def test_limit_itself_fools_every_fixed_witness_but_not_random_rounds():
    n = DETERMINISTIC_LIMIT
    assert n % 1287836182261 == 0
    assert not is_probable_prime(n, rounds=20)


@pytest.mark.parametrize("e", [61, 89, 107, 127, 521])
def test_mersenne_primes(e):
    assert is_probable_prime(2**e - 1)
    assert not is_probable_prime(2**e + 1 if e > 1 else 4)


def test_probabilistic_regime_is_reproducible():
    n = (2**127 - 1) * (2**61 - 1)
    assert is_probable_prime(n, rounds=5) == is_probable_prime(n, rounds=5) is False


def test_negative_input_rejected():
    with pytest.raises(ValueError):
        is_probable_prime(-7)


@pytest.mark.parametrize("m, k, r", [(25, 2, 5), (26, 2, 5), (1828, 3, 12), (1, 5, 1), (7, 1, 7),
                                     (2**64, 2, 2**32), (2**64 - 1, 2, 2**32 - 1)])
def test_integer_nth_root_examples(m, k, r):
    assert integer_nth_root(m, k) == r


def test_integer_nth_root_rejects_bad_arguments():
    with pytest.raises(ValueError):
        integer_nth_root(10, 0)
    with pytest.raises(ValueError):
        integer_nth_root(0, 2)


def test_integer_nth_root_exhaustive_small():
    for m in range(1, 10**4 + 1):
        for k in range(1, 21):
            r = integer_nth_root(m, k)
            assert r**k <= m < (r + 1) ** k, (m, k, r)


@given(st.integers(min_value=1, max_value=10**200), st.integers(min_value=1, max_value=64))
def test_integer_nth_root_bracket_big(m, k):
    r = integer_nth_root(m, k)
    assert r**k <= m < (r + 1) ** k


@given(st.integers(min_value=2, max_value=10**40), st.integers(min_value=2, max_value=12))
def test_integer_nth_root_exact_powers(r, k):
    assert integer_nth_root(r**k, k) == r
    assert integer_nth_root(r**k - 1, k) == r - 1


@pytest.mark.parametrize("m, expected", [(25, (5, 2)), (457, (457, 1)), (100, None), (2, (2, 1)),
                                         (1024, (2, 10)), (3**20, (3, 20)), (6, None)])
def test_prime_power_decompose_examples(m, expected):
    assert prime_power_decompose(m) == expected


def test_prime_power_decompose_rejects_small():
    for m in (-1, 0, 1):
        with pytest.raises(ValueError):
            prime_power_decompose(m)


def test_prime_power_decompose_matches_trial_division():
    for m in range(2, 10**5 + 1):
        f = trial_division_factor(m)
        expected = next(iter(f.items())) if len(f) == 1 else None
        assert prime_power_decompose(m) == expected, m


@given(st.sampled_from([3, 5, 7, 101, 65537, 2**31 - 1, 2**61 - 1]), st.integers(1, 30))
def test_prime_power_decompose_large(p, n):
    assert prime_power_decompose(p**n) == (p, n)
    assert prime_power_decompose(p**n * 3 * 5 if p not in (3, 5) else p**n * 7 * 11) is None


@pytest.mark.parametrize("m, kind, p, n", [
    (100, PrimePowerKind.FOUR, 5, 2),
    (1832, PrimePowerKind.EIGHT, 229, 1),
    (1828, PrimePowerKind.FOUR, 457, 1),
    (194, PrimePowerKind.TWO, 97, 1),
    (169, PrimePowerKind.PURE, 13, 2),
    (509, PrimePowerKind.PURE, 509, 1),
])
def test_classify_two_adic_examples(m, kind, p, n):
    assert classify_two_adic(m) == PrimePowerForm(kind, p, n)


@pytest.mark.parametrize("m", [64, 2, 4, 8, 16, 15, 2 * 15, 16 * 3, 100 * 9])
def test_classify_two_adic_none(m):
    form = classify_two_adic(m)
    assert form.kind is PrimePowerKind.NONE
    assert not form


def test_classify_two_adic_reconstructs_exhaustive():
    for m in range(2, 20001):
        form = classify_two_adic(m)
        f = trial_division_factor(m)
        e = f.pop(2, 0)
        expect = e <= 3 and len(f) == 1
        assert bool(form) is expect, m
        if form:
            assert form.p % 2 == 1 and form.n >= 1
            assert form.value() == m
            assert form.kind.two_exponent == e


@given(st.integers(0, 3), st.sampled_from([3, 5, 13, 97, 457, 2**89 - 1]), st.integers(1, 5))
def test_classify_two_adic_roundtrip(e, p, n):
    m = 2**e * p**n
    form = classify_two_adic(m)
    assert (form.p, form.n, form.kind.two_exponent) == (p, n, e)
    assert form.value() == m
    assert str(form) == f"2^{e}*{p}^{n}"
