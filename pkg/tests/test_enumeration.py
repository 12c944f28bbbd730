import pytest

from markoff import brute_force_triples, enumerate_up_to, multiplicity
from markoff._pykernels import naive_triples
from markoff.triples import MarkoffTriple as T, reduce_to_root

# Leading triples as printed in the literature; the twelfth printed entry
# (89, 233, 610) is a misprint and is replaced by the brute-force result.
FIRST_ELEVEN = [
    T(1, 1, 1), T(1, 1, 2), T(1, 2, 5), T(1, 5, 13), T(2, 5, 29), T(1, 13, 34),
    T(1, 34, 89), T(2, 29, 169), T(5, 13, 194), T(1, 89, 233), T(5, 29, 433),
]
TWELFTH = T(1, 233, 610)

# OEIS A002559, all Markoff numbers below 10^6.
MARKOFF_NUMBERS = [
    1, 2, 5, 13, 29, 34, 89, 169, 194, 233, 433, 610, 985, 1325, 1597, 2897,
    4181, 5741, 6466, 7561, 9077, 10946, 14701, 28657, 33461, 37666, 43261,
    51641, 62210, 75025, 96557, 135137, 195025, 196418, 294685, 426389,
    499393, 514229, 646018, 925765,
]


def test_small_bounds():
    assert list(enumerate_up_to(30).triples) == FIRST_ELEVEN[:5]
    assert list(enumerate_up_to(1).triples) == [T(1, 1, 1)]
    assert list(enumerate_up_to(2).triples) == FIRST_ELEVEN[:2]


def test_against_literal_triple_loop():
    expected = sorted((T(*t) for t in naive_triples(250)), key=lambda t: (t.c, t.b, t.a))
    assert list(enumerate_up_to(250).triples) == expected == FIRST_ELEVEN[:10]


def test_bound_700():
    triples = list(enumerate_up_to(700).triples)
    assert triples == brute_force_triples(700)
    assert triples == FIRST_ELEVEN + [TWELFTH]
    assert T(89, 233, 610) not in triples


def test_rejects_bad_bound():
    with pytest.raises(ValueError):
        enumerate_up_to(0)


def test_markoff_numbers_to_one_million(report_1e6):
    assert list(report_1e6.registry) == MARKOFF_NUMBERS
    assert len(report_1e6) == 40


def test_ordering_and_registry(report_1e6):
    keys = [(t.c, t.b, t.a) for t in report_1e6.triples]
    assert keys == sorted(keys)
    assert len(set(report_1e6.triples)) == len(report_1e6)
    assert set(report_1e6.registry) == {t.c for t in report_1e6.triples}
    for c, ts in report_1e6.registry.items():
        assert all(t.c == c for t in ts)


def test_restrict_matches_fresh_enumeration(report_1e6):
    for b in (1, 2, 5, 6, 100, 610, 611, 5000, 10**5, 999_999):
        assert report_1e6.restrict(b) == enumerate_up_to(b)
    with pytest.raises(ValueError):
        report_1e6.restrict(10**6 + 1)


def test_reduction_paths_stay_below_bound(report_1e6):
    for t in report_1e6.triples:
        assert all(s.c <= t.c for s in reduce_to_root(t))


def test_brute_force_agreement_up_to_2000():
    brute = brute_force_triples(2000)
    full = enumerate_up_to(2000)
    assert list(full.triples) == brute
    for b in range(1, 2001, 37):
        assert list(enumerate_up_to(b).triples) == [t for t in brute if t.c <= b]


def test_multiplicity():
    report = enumerate_up_to(1000)
    assert multiplicity(report, 610) == 1
    assert multiplicity(report, 6) == 0
    assert multiplicity(report, 1) == 1
    with pytest.raises(ValueError):
        multiplicity(report, 1001)


def test_large_bound_is_exact():
    report = enumerate_up_to(10**30)
    for t in report.triples:
        assert t.satisfies_equation()
    # Fibonacci and Pell branches: (1, F(2k-1), F(2k+1)) and (2, P(2k-1), P(2k+1)).
    assert T(1, 1134903170, 2971215073) in report.triples
    assert T(2, 5741, 33461) in report.triples
