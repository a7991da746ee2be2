"""Compare computed output with golden files.

Betti diagrams and certificate statuses must match exactly; ideal
generator sets are compared as sets of polynomials up to nonzero scalars.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path

from .homology import BettiDiagram
from .polyalg.poly import parse_ideal_text


@dataclass
class GoldenDiff:
    kind: str
    match: bool
    differences: list = field(default_factory=list)

    def to_json(self):
        return {"kind": self.kind, "match": self.match, "differences": self.differences}


def detect_kind(text):
    s = text.lstrip()
    if s.startswith("[") or s.startswith("{"):
        return "certificate"
    if "total:" in text:
        return "betti"
    return "ideal"


def compare_betti(actual, golden):
    if isinstance(actual, str):
        actual = BettiDiagram.from_text(actual)
    if isinstance(golden, str):
        golden = BettiDiagram.from_text(golden)
    diffs = []
    for i, j in sorted(set(actual.entries) | set(golden.entries)):
        a, b = actual[i, j], golden[i, j]
        if a != b:
            diffs.append({"row": j - i, "column": i, "expected": b, "actual": a})
    return GoldenDiff("betti", not diffs, diffs)


def compare_ideal(actual_polys, golden, ring):
    if isinstance(golden, str):
        golden = parse_ideal_text(golden, ring)
    a = {f.monic() for f in actual_polys if f}
    b = {f.monic() for f in golden if f}
    diffs = [{"missing": str(f)} for f in sorted(b - a, key=str)]
    diffs += [{"unexpected": str(f)} for f in sorted(a - b, key=str)]
    return GoldenDiff("ideal", not diffs, diffs)


def compare_certificate(actual, golden):
    if isinstance(golden, str):
        golden = json.loads(golden)
    want = {c["check"]: c["status"] for c in golden}
    got = {c["check"]: c["status"] for c in actual}
    diffs = [{"check": k, "expected": want.get(k), "actual": got.get(k)}
             for k in sorted(set(want) | set(got)) if want.get(k) != got.get(k)]
    return GoldenDiff("certificate", not diffs, diffs)


def compare_golden(actual, golden_path, ring=None, kind=None):
    """Dispatch on the golden file's content (or ``kind``)."""
    text = Path(golden_path).read_text()
    kind = kind or detect_kind(text)
    if kind == "betti":
        return compare_betti(actual, text)
    if kind == "ideal":
        if ring is None:
            raise ValueError("comparing ideals needs the polynomial ring")
        return compare_ideal(actual, text, ring)
    if kind == "certificate":
        return compare_certificate(actual, text)
    raise ValueError(f"unknown golden kind {kind!r}")
