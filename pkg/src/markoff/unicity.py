"""Uniqueness certificates for Markoff numbers and the empirical multiplicity check.

A Markoff number c is known to be unique if c itself is p^n or 2p^n, or if
3c - 2 or 3c + 2 is p^n, 4p^n or 8p^n (p an odd prime). :func:`classify`
records every such witness it finds; neither criterion is necessary, so
``NO_CRITERION`` is an ordinary outcome.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Tuple

from .arith import PrimePowerForm, PrimePowerKind, classify_two_adic
from .enumeration import EnumerationReport
from .triples import MarkoffTriple


class Verdict(enum.Enum):
    UNIQUE_BY_OWN_FORM = "UniqueByOwnPrimePower"
    UNIQUE_BY_SHIFTED_FORM = "UniqueByShiftedPrimePower"
    SINGULAR = "Singular"
    NO_CRITERION = "NoCriterion"


class Source(enum.Enum):
    SELF = "SELF"    # c
    MINUS = "MINUS"  # 3c - 2
    PLUS = "PLUS"    # 3c + 2

    def base_value(self, c: int) -> int:
        if self is Source.SELF:
            return c
        return 3 * c - 2 if self is Source.MINUS else 3 * c + 2


_ACCEPTED = {
    Source.SELF: {PrimePowerKind.PURE, PrimePowerKind.TWO},
    Source.MINUS: {PrimePowerKind.PURE, PrimePowerKind.FOUR, PrimePowerKind.EIGHT},
    Source.PLUS: {PrimePowerKind.PURE, PrimePowerKind.FOUR, PrimePowerKind.EIGHT},
}


class Witness(NamedTuple):
    source: Source
    form: PrimePowerForm
    base_value: int

    def is_sound(self) -> bool:
        return self.form.kind in _ACCEPTED[self.source] and self.form.value() == self.base_value

    def __str__(self) -> str:
        return f"{self.source.value}:{self.form}"


@dataclass(frozen=True)
class UniquenessCertificate:
    c: int
    verdict: Verdict
    witnesses: Tuple[Witness, ...] = ()

    @property
    def certified(self) -> bool:
        return self.verdict is not Verdict.NO_CRITERION


def classify(c: int, rounds: Optional[int] = None) -> UniquenessCertificate:
    if c < 1:
        raise ValueError(f"c must be >= 1, got {c}")
    if c <= 2:
        return UniquenessCertificate(c, Verdict.SINGULAR)

    witnesses = []
    for source in Source:
        m = source.base_value(c)
        form = classify_two_adic(m, rounds)
        if form and form.kind in _ACCEPTED[source]:
            witnesses.append(Witness(source, form, m))

    sources = {w.source for w in witnesses}
    if Source.SELF in sources:
        verdict = Verdict.UNIQUE_BY_OWN_FORM
    elif sources:
        verdict = Verdict.UNIQUE_BY_SHIFTED_FORM
    else:
        verdict = Verdict.NO_CRITERION
    return UniquenessCertificate(c, verdict, tuple(witnesses))


class ClassificationSweep(NamedTuple):
    certificates: List[UniquenessCertificate]
    counts: Dict[Verdict, int]
    uncovered: List[int]


def sweep_classify(report: EnumerationReport, rounds: Optional[int] = None) -> ClassificationSweep:
    certs = [classify(c, rounds) for c in sorted(report.registry)]
    counts = Counter(cert.verdict for cert in certs)
    uncovered = [cert.c for cert in certs if cert.verdict is Verdict.NO_CRITERION]
    return ClassificationSweep(certs, {v: counts.get(v, 0) for v in Verdict}, uncovered)


class UnicityViolation(NamedTuple):
    c: int
    triples: Tuple[MarkoffTriple, ...]


def check_unicity_empirically(report: EnumerationReport) -> Tuple[bool, List[UnicityViolation]]:
    """True when every Markoff number up to the bound has exactly one triple.

    A violation would be a counterexample to the unicity conjecture, so the
    full list of offending triples is returned rather than just a flag.
    """
    violations = [
        UnicityViolation(c, ts) for c, ts in sorted(report.registry.items()) if len(ts) > 1
    ]
    return not violations, violations
