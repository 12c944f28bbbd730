#!/usr/bin/env python3
"""Time the compiled kernels against the pure-Python fallbacks.

    python benchmarks/bench_kernels.py [--repeat N]

The triple scans are different algorithms: the compiled one is the literal
a <= b <= c loop, the Python one solves for c. ``naive`` rows time the
literal loop in both languages at a bound small enough for Python.
"""
import argparse
import time

from markoff import _pykernels
from markoff.oracles import is_lemma2_modulus

try:
    from markoff import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def lemma2_all(mod, max_m):
    return [mod.lemma2_root_counts(m) for m in range(3, max_m + 1) if is_lemma2_modulus(m)]


CASES = [
    ("triples, literal loop, B=300", lambda m: m.brute_force_triples(300) if m is _ckernels else m.naive_triples(300)),
    ("triples, fastest available, B=2000", lambda m: m.brute_force_triples(2000)),
    ("lemma1 scan, max_xy=300", lambda m: m.lemma1_scan(300)),
    ("lemma2 counts, max_m=2000", lambda m: lemma2_all(m, 2000)),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"{'kernel':38s} {'python [s]':>11s} {'cython [s]':>11s} {'speedup':>8s}")
    for name, run in CASES:
        t_py, r_py = best_of(lambda: run(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:38s} {t_py:11.4f} {'n/a':>11s} {'':>8s}")
            continue
        t_c, r_c = best_of(lambda: run(_ckernels), args.repeat)
        same = sorted(r_py) == sorted(r_c) if isinstance(r_py, list) else r_py == r_c
        flag = "" if same else "  MISMATCH"
        print(f"{name:38s} {t_py:11.4f} {t_c:11.4f} {t_py / t_c:7.1f}x{flag}")


if __name__ == "__main__":
    main()
