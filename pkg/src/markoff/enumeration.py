"""Walk the Markoff tree from (1, 1, 1) and collect every triple up to a bound."""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .triples import ROOT, MarkoffTriple, children


@dataclass(frozen=True)
class EnumerationReport:
    bound: int
    triples: Tuple[MarkoffTriple, ...]
    registry: Dict[int, Tuple[MarkoffTriple, ...]] = field(repr=False)

    def __len__(self) -> int:
        return len(self.triples)

    @property
    def markoff_numbers(self) -> List[int]:
        return list(self.registry)

    def restrict(self, bound: int) -> "EnumerationReport":
        """The report that enumerating to a smaller ``bound`` would give."""
        if bound > self.bound:
            raise ValueError(f"cannot extend a report to {bound} beyond {self.bound}")
        return _build(bound, [t for t in self.triples if t.c <= bound])


def _build(bound: int, triples: List[MarkoffTriple]) -> EnumerationReport:
    registry: Dict[int, List[MarkoffTriple]] = {}
    for t in triples:
        registry.setdefault(t.c, []).append(t)
    return EnumerationReport(
        bound, tuple(triples), {c: tuple(ts) for c, ts in registry.items()}
    )


def enumerate_up_to(bound: int) -> EnumerationReport:
    """All Markoff triples with largest element <= ``bound``, ascending by (c, b, a).

    Children always have a strictly larger maximum than their parent, so a
    min-heap on (c, b, a) pops triples in exactly the output order.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    heap = [(ROOT.c, ROOT.b, ROOT.a)]
    seen = {ROOT}
    out: List[MarkoffTriple] = []
    while heap:
        c, b, a = heapq.heappop(heap)
        t = MarkoffTriple(a, b, c)
        out.append(t)
        for u in children(t):
            if u.c <= bound and u not in seen:
                seen.add(u)
                heapq.heappush(heap, (u.c, u.b, u.a))
    return _build(bound, out)


def multiplicity(report: EnumerationReport, c: int) -> int:
    """Number of triples in ``report`` whose largest element is ``c``."""
    if c > report.bound:
        raise ValueError(f"c = {c} exceeds the report bound {report.bound}")
    return len(report.registry.get(c, ()))
