"""Machine-readable output records (JSONL and CSV).

Every integer is written as a decimal string so that values beyond 2**53
survive tools that parse JSON numbers as doubles.
"""
from __future__ import annotations

import csv
import json
from typing import IO, Any, Dict, List

from .arith import NO_FORM, PrimePowerForm, PrimePowerKind
from .congruence import Check, CongruenceFinding
from .triples import MarkoffTriple
from .unicity import Source, UniquenessCertificate, Verdict, Witness

Record = Dict[str, Any]

CSV_COLUMNS = {
    "triple": ["a", "b", "c"],
    "finding": ["a", "b", "c", "passed", "checks"],
    "certificate": ["c", "verdict", "witnesses"],
    "violation": ["suite", "detail"],
}


def _s(n: int) -> str:
    return str(n)


def triple_record(t: MarkoffTriple) -> Record:
    return {"kind": "triple", "a": _s(t.a), "b": _s(t.b), "c": _s(t.c)}


def finding_record(f: CongruenceFinding) -> Record:
    a, b, c = f.triple
    return {
        "kind": "finding",
        "a": _s(a), "b": _s(b), "c": _s(c),
        "passed": f.passed,
        "checks": [
            {
                "clause": ch.clause,
                "element": _s(ch.element),
                "expected": _s(ch.expected),
                "modulus": _s(ch.modulus),
                "actual": _s(ch.actual),
                "pass": ch.passed,
            }
            for ch in f.checks
        ],
    }


def _form_fields(form: PrimePowerForm) -> Record:
    return {
        "form": form.kind.value,
        "two_exponent": _s(form.kind.two_exponent),
        "p": _s(form.p),
        "n": _s(form.n),
    }


def certificate_record(cert: UniquenessCertificate) -> Record:
    return {
        "kind": "certificate",
        "c": _s(cert.c),
        "verdict": cert.verdict.value,
        "witnesses": [
            {"source": w.source.value, "base_value": _s(w.base_value), **_form_fields(w.form)}
            for w in cert.witnesses
        ],
    }


def violation_record(suite: str, **detail: Any) -> Record:
    return {"kind": "violation", "suite": suite, **{k: _encode(v) for k, v in detail.items()}}


def summary_record(**fields: Any) -> Record:
    return {"kind": "summary", **{k: _encode(v) for k, v in fields.items()}}


def _encode(v: Any) -> Any:
    if isinstance(v, bool) or v is None or isinstance(v, (str, float)):
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, dict):
        return {str(k): _encode(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_encode(x) for x in v]
    return str(v)


# -- decoding ---------------------------------------------------------------

def parse_triple(rec: Record) -> MarkoffTriple:
    return MarkoffTriple(int(rec["a"]), int(rec["b"]), int(rec["c"]))


def parse_finding(rec: Record) -> CongruenceFinding:
    checks = tuple(
        Check(ch["clause"], int(ch["element"]), int(ch["expected"]), int(ch["modulus"]), int(ch["actual"]))
        for ch in rec["checks"]
    )
    return CongruenceFinding(parse_triple(rec), checks)


def parse_certificate(rec: Record) -> UniquenessCertificate:
    witnesses = []
    for w in rec["witnesses"]:
        kind = PrimePowerKind(w["form"])
        form = PrimePowerForm(kind, int(w["p"]), int(w["n"])) if kind is not PrimePowerKind.NONE else NO_FORM
        witnesses.append(Witness(Source(w["source"]), form, int(w["base_value"])))
    return UniquenessCertificate(int(rec["c"]), Verdict(rec["verdict"]), tuple(witnesses))


PARSERS = {
    "triple": parse_triple,
    "finding": parse_finding,
    "certificate": parse_certificate,
}


def parse_record(line: str):
    """Decode one JSONL line back into its domain value (or the raw dict)."""
    rec = json.loads(line)
    parser = PARSERS.get(rec["kind"])
    return parser(rec) if parser else rec


# -- emitters ---------------------------------------------------------------

def _csv_row(rec: Record) -> List[str]:
    kind = rec["kind"]
    if kind == "certificate":
        cert = parse_certificate(rec)
        return [rec["c"], rec["verdict"], ";".join(str(w) for w in cert.witnesses)]
    if kind == "finding":
        checks = ";".join(
            f"{ch['clause']}({ch['element']})={ch['actual']}mod{ch['modulus']}" for ch in rec["checks"]
        )
        return [rec["a"], rec["b"], rec["c"], str(rec["passed"]).lower(), checks]
    if kind == "violation":
        detail = ";".join(f"{k}={_flat(v)}" for k, v in rec.items() if k not in ("kind", "suite"))
        return [rec["suite"], detail]
    return [_flat(rec[col]) for col in CSV_COLUMNS[kind]]


def _flat(v: Any) -> str:
    if isinstance(v, list):
        return ";".join(_flat(x) for x in v)
    if isinstance(v, dict):
        return ";".join(f"{k}={_flat(x)}" for k, x in v.items())
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


class Emitter:
    """Writes records to ``out``: JSONL streams, CSV buffers one table per kind."""

    def __init__(self, out: IO[str], fmt: str = "jsonl"):
        if fmt not in ("jsonl", "csv"):
            raise ValueError(f"unknown format {fmt!r}")
        self.out = out
        self.fmt = fmt
        self._tables: Dict[str, List[Record]] = {}

    def emit(self, rec: Record) -> None:
        if self.fmt == "jsonl":
            self.out.write(json.dumps(rec, separators=(",", ":")) + "\n")
        else:
            self._tables.setdefault(rec["kind"], []).append(rec)

    def close(self) -> None:
        if self.fmt != "csv":
            return
        first = True
        for kind, recs in self._tables.items():
            if not first:
                self.out.write("\n")
            first = False
            writer = csv.writer(self.out, lineterminator="\n")
            if kind == "summary":
                cols = list(dict.fromkeys(k for r in recs for k in r if k != "kind"))
                writer.writerow(cols)
                for r in recs:
                    writer.writerow([_flat(r.get(c, "")) for c in cols])
            else:
                writer.writerow(CSV_COLUMNS[kind])
                for r in recs:
                    writer.writerow(_csv_row(r))
        self._tables.clear()
