"""Residue checks on Markoff numbers: mod 4 for odd elements, mod 8/32 for even ones."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Tuple

from .enumeration import EnumerationReport
from .triples import MarkoffTriple

# Stable clause identifiers; they appear verbatim in CLI output.
COPRIME = "COPRIME"
ODD4 = "ODD4"
EVEN8 = "EVEN8"
EVEN32 = "EVEN32"
COR4 = "COR4"
COR8 = "COR8"


class Check(NamedTuple):
    clause: str
    element: int
    expected: int
    modulus: int
    actual: int

    @property
    def passed(self) -> bool:
        return self.actual == self.expected


@dataclass(frozen=True)
class CongruenceFinding:
    triple: MarkoffTriple
    checks: Tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(ch.passed for ch in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [ch for ch in self.checks if not ch.passed]


def _element_checks(e: int) -> List[Check]:
    if e % 2:
        return [Check(ODD4, e, 1, 4, e % 4)]
    return [
        Check(EVEN8, e, 2, 8, e % 8),
        Check(EVEN32, e, 2, 32, e % 32),
        Check(COR4, e, 4, 32, (3 * e - 2) % 32),
        Check(COR8, e, 8, 32, (3 * e + 2) % 32),
    ]


def check_triple_congruences(t: MarkoffTriple) -> CongruenceFinding:
    # COPRIME is a 0/1 flag stored as a residue mod 2; 1 means all gcds are 1.
    checks = [Check(COPRIME, t.c, 1, 2, int(t.is_pairwise_coprime()))]
    for e in t:
        checks.extend(_element_checks(e))
    return CongruenceFinding(t, tuple(checks))


class CongruenceSweep(NamedTuple):
    findings: List[CongruenceFinding]
    checks: int
    failures: int

    @property
    def failing(self) -> List[CongruenceFinding]:
        return [f for f in self.findings if not f.passed]


def sweep_congruences(report: EnumerationReport | Iterable[MarkoffTriple]) -> CongruenceSweep:
    triples = report.triples if isinstance(report, EnumerationReport) else report
    findings = [check_triple_congruences(t) for t in triples]
    n_checks = sum(len(f.checks) for f in findings)
    n_fail = sum(len(f.failures) for f in findings)
    return CongruenceSweep(findings, n_checks, n_fail)
