"""Backend selection for the brute-force kernels.

Uses the compiled Cython module when it was built, otherwise the pure-Python
implementations. Set ``MARKOFF_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels

if os.environ.get("MARKOFF_PURE_PYTHON", "") not in ("", "0"):
    _ext = None
else:
    try:
        from . import _ckernels as _ext
    except ImportError:
        _ext = None

BACKEND = "cython" if _ext is not None else "python"


def brute_force_triples(bound):
    if _ext is not None and bound <= _ext.MAX_TRIPLE_BOUND:
        return _ext.brute_force_triples(bound)
    return _pykernels.brute_force_triples(bound)


def lemma2_root_counts(m):
    if _ext is not None and m <= _ext.MAX_MODULUS:
        return _ext.lemma2_root_counts(m)
    return _pykernels.lemma2_root_counts(m)


def lemma1_scan(max_xy):
    if _ext is not None and max_xy <= _ext.MAX_XY:
        return _ext.lemma1_scan(max_xy)
    return _pykernels.lemma1_scan(max_xy)
