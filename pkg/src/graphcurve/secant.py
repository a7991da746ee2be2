"""Secant varieties of a line arrangement.

Sigma_k is taken to be the union of the projective spans of every k+1
distinct lines.  Each span is linear, so its ideal is generated by the
linear forms vanishing on all member lines; Sigma_k's ideal is the
intersection of those span ideals, after discarding spans contained in
another one.
"""

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from .labeling import LinearIdeal, line_ideals
from .polyalg import linalg
from .polyalg.field import DEFAULT_PRIME
from .polyalg.ideal import Ideal, intersect_all
from .polyalg.poly import PolynomialRing


def _forms_to_linear_ideal(rows, nvars):
    forms = tuple({i: int(c) for i, c in enumerate(row) if c} for row in rows)
    return LinearIdeal(forms, nvars)


def span_ideal(lines, p=DEFAULT_PRIME):
    """Linear forms vanishing on every given line (a LinearIdeal over GF(p))."""
    lines = list(lines)
    if not lines:
        raise ValueError("span of no lines")
    n = lines[0].nvars
    pts = np.vstack([li.points(p) for li in lines])
    rows = linalg.nullspace(pts, p, n)
    return _forms_to_linear_ideal(rows, n)


@dataclass(frozen=True)
class SpanSubspace:
    vertices: tuple
    ideal: LinearIdeal
    points: object  # basis rows of the span, as a subspace of k^n
    span_dim: int  # projective dimension

    def forms_matrix(self, p):
        return self.ideal.matrix(p) if self.ideal.forms else np.zeros((0, self.ideal.nvars), dtype=np.int64)

    def to_json(self):
        return {"vertices": list(self.vertices), "span_dim": self.span_dim}


def _span(vertices, lines, p):
    pts = np.vstack([lines[v].points(p) for v in vertices])
    R, _ = linalg.rref(pts, p)
    n = lines[0].nvars
    forms = linalg.nullspace(R, p, n)
    return SpanSubspace(tuple(vertices), _forms_to_linear_ideal(forms, n), R, R.shape[0] - 1)


def _contained(a, b, p):
    """Span a lies inside span b: every form of b vanishes on the points of a."""
    F = b.forms_matrix(p)
    if F.shape[0] == 0:
        return True
    return not (a.points @ F.T % p).any()


@dataclass
class SecantSpec:
    k: int
    candidates: int
    components: list
    ideal: object
    status: str = "ok"
    extra: dict = field(default_factory=dict)

    def component_report(self):
        return [c.to_json() for c in self.components]

    def dumps(self):
        return json.dumps(self.component_report(), sort_keys=True)


def candidate_spans(labeling, k, p=DEFAULT_PRIME):
    lines = line_ideals(labeling)
    return [_span(S, lines, p) for S in combinations(range(labeling.graph.vertex_count), k + 1)]


def prune_spans(spans, p=DEFAULT_PRIME):
    """Drop spans contained in another candidate; among equal spans keep the first."""
    kept = []
    for i, s in enumerate(spans):
        dominated = False
        for j, t in enumerate(spans):
            if i == j or not _contained(s, t, p):
                continue
            if not _contained(t, s, p) or j < i:
                dominated = True
                break
        if not dominated:
            kept.append(s)
    return kept


def secant_ideal(labeling, k=1, ring=None, prune=True, max_basis=None):
    """Sigma_k as an intersection of span ideals.

    When 2k + 1 >= d - g the secant variety fills the ambient space and the
    zero ideal is returned with status "fills ambient space".
    """
    if k < 1:
        raise ValueError("secant level must be at least 1")
    ring = ring or PolynomialRing(labeling.nvars)
    p = ring.field.p or DEFAULT_PRIME
    if 2 * k + 1 >= labeling.ambient_dim:
        return SecantSpec(k, 0, [], Ideal(ring, []), status="fills ambient space")
    spans = candidate_spans(labeling, k, p)
    kept = prune_spans(spans, p) if prune else spans
    ideals = [Ideal(ring, s.ideal.polynomials(ring)) for s in kept]
    I = intersect_all(ideals, max_basis=max_basis)
    return SecantSpec(k, len(spans), kept, I)


def secant_degree_prediction(d, g, m=None):
    """C(d-1, 2) - g, the degree of Sigma_1; also C(d, 2) - m counted from the graph.

    Returns ``(formula, nonadjacent_pairs)``; the two agree because m = d + g - 1.
    """
    m = d + g - 1 if m is None else m
    formula = comb(d - 1, 2) - g
    pairs = comb(d, 2) - m
    if formula != pairs:
        raise ValueError(f"edge count {m} does not match d={d}, g={g}")
    return formula, pairs
