"""Enumeration and verification tools for Markoff triples a^2 + b^2 + c^2 = 3abc."""
from .arith import (
    PrimePowerForm,
    PrimePowerKind,
    classify_two_adic,
    integer_nth_root,
    is_probable_prime,
    prime_power_decompose,
)
from .congruence import CongruenceFinding, check_triple_congruences, sweep_congruences
from .enumeration import EnumerationReport, enumerate_up_to, multiplicity
from .kernels import BACKEND
from .oracles import (
    brute_force_triples,
    check_rewrites,
    count_quadratic_roots,
    sweep_lemma1,
    sweep_lemma2,
)
from .triples import (
    MarkoffTriple,
    NotMarkoffError,
    check_lemma3,
    make_triple,
    neighbors,
    reduce_step,
    reduce_to_root,
)
from .unicity import (
    UniquenessCertificate,
    Verdict,
    check_unicity_empirically,
    classify,
    sweep_classify,
)

__version__ = "0.1.0"
