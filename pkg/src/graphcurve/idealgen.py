"""The ideal of a graph curve, two ways, and a certificate that they agree.

``combinatorial_generators`` reads products of edge-label forms straight off
the graph by scanning for forbidden local configurations at each vertex.
``intersection_ideal`` intersects the line ideals; it is the ground truth.
``quadric_space`` is a cheap linear-algebra oracle for the degree-2 part.
"""

import json
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .labeling import Difference, Single, line_ideals
from .polyalg import linalg
from .polyalg.ideal import Ideal, intersect_all
from .polyalg.poly import PolynomialRing, format_polynomial


@dataclass(frozen=True)
class QuadricProduct:
    """ell(alpha) * ell(beta) for two edge labels.

    ``source`` says which rule admitted it: "monomial" (x_i x_j),
    "mixed" (x_i (x_j - x_k)) or "binomial" ((x_i - x_j)(x_k - x_l)).
    """

    left: object
    right: object
    source: str

    def __post_init__(self):
        idx = self.left.indices + self.right.indices
        if len(set(idx)) != len(idx):
            raise ValueError(f"repeated variable in {self.left} * {self.right}")

    def polynomial(self, ring):
        return ring.linear_form(self.left.form()) * ring.linear_form(self.right.form())

    def __str__(self):
        def f(lab):
            return f"x{lab.i}" if isinstance(lab, Single) else f"(x{lab.j}-x{lab.k})"
        return f"{f(self.left)}*{f(self.right)}"


def curve_ring(labeling, field=None, order="grevlex"):
    return PolynomialRing(labeling.nvars, field, order)


def _local_data(labeling):
    """Per vertex: indices appearing on incident edges, and incident difference labels
    whose binomial lies in the line ideal (those at non-trivalent vertices)."""
    g = labeling.graph
    out = []
    for v in range(g.vertex_count):
        inc = [lab for _, lab in labeling.incident(v)]
        idx = {i for lab in inc for i in lab.indices}
        binom = set() if g.degree(v) == 3 else {lab for lab in inc if isinstance(lab, Difference)}
        out.append((idx, binom))
    return out


def _kills(label, idx, binom):
    """ell(label) lies in the ideal of a line with these local data."""
    if not set(label.indices) & idx:
        return True
    return label in binom


def _vanishes(a, b, local):
    return all(_kills(a, idx, bn) or _kills(b, idx, bn) for idx, bn in local)


def combinatorial_generators(labeling, prune=True):
    """Products of label forms that vanish on the curve, found by local scans.

    A line ideal is a linear prime, so ell(alpha) ell(beta) vanishes on L_v
    iff one factor does, and that is read off the labels at v: x_i vanishes
    unless i appears at v, and x_j - x_k vanishes unless j or k appears at v
    without e_j - e_k being a binomial of L_v.  When the assumptions hold this
    is the same as forbidding e_i next to e_j or e_j - e_k (for x_i x_j) and
    e_i next to e_j or e_k (for x_i (x_j - x_k)), with every product of two
    difference labels admitted.

    With ``prune``, a product is dropped when it already lies in the span of
    the admitted monomials x_i x_j.
    """
    local = _local_data(labeling)
    singles = sorted({lab for lab in labeling.labels.values() if isinstance(lab, Single)})
    diffs = sorted({lab for lab in labeling.labels.values() if isinstance(lab, Difference)})
    out = []
    for a, b in combinations(singles, 2):
        if _vanishes(a, b, local):
            out.append(QuadricProduct(a, b, "monomial"))
    monos = {frozenset((q.left.i, q.right.i)) for q in out}

    def implied(q):
        return all(frozenset((i, j)) in monos for i in q.left.indices for j in q.right.indices)

    for s in singles:
        for d in diffs:
            if s.i in d.indices or not _vanishes(s, d, local):
                continue
            q = QuadricProduct(s, d, "mixed")
            if not (prune and implied(q)):
                out.append(q)
    for d1, d2 in combinations(diffs, 2):
        if set(d1.indices) & set(d2.indices) or not _vanishes(d1, d2, local):
            continue
        q = QuadricProduct(d1, d2, "binomial")
        if not (prune and implied(q)):
            out.append(q)
    return out


def generator_polynomials(labeling, ring=None):
    ring = ring or curve_ring(labeling)
    seen, out = set(), []
    for q in combinatorial_generators(labeling):
        f = q.polynomial(ring).monic()
        if f not in seen:
            seen.add(f)
            out.append(f)
    return out


def line_ideal_polys(labeling, ring):
    return [Ideal(ring, li.polynomials(ring)) for li in line_ideals(labeling)]


def arrangement_ideal(labeling, vertices, ring=None, max_basis=None):
    """Ideal of the union of the lines at ``vertices`` (in the ambient space of the labeling)."""
    ring = ring or curve_ring(labeling)
    lines = line_ideals(labeling)
    return intersect_all([Ideal(ring, lines[v].polynomials(ring)) for v in vertices], max_basis=max_basis)


def intersection_ideal(labeling, ring=None, max_basis=None):
    """I_{C_G} as the intersection of all line ideals, in ascending vertex order."""
    return arrangement_ideal(labeling, range(labeling.graph.vertex_count), ring, max_basis)


def _quadric_monomials(n):
    return [(a, b) for a in range(n) for b in range(a, n)]


def quadric_space(labeling, p=None):
    """Basis of the degree-2 forms vanishing on every line.

    A quadric q vanishes on the line through P and Q iff q(P), q(Q) and the
    polarization B(P, Q) all vanish.  Returns ``(monomials, rows)``: the
    monomial pairs (a, b), a <= b, and the basis as coefficient rows.
    """
    from .polyalg.field import DEFAULT_PRIME
    p = p or DEFAULT_PRIME
    n = labeling.nvars
    monos = _quadric_monomials(n)
    a = np.array([m[0] for m in monos])
    b = np.array([m[1] for m in monos])
    rows = []
    for li in line_ideals(labeling):
        P = li.points(p)
        if P.shape[0] == 1:
            rows.append(P[0, a] * P[0, b] % p)
            continue
        u, w = P[0], P[1]
        rows.append(u[a] * u[b] % p)
        rows.append(w[a] * w[b] % p)
        rows.append((u[a] * w[b] + w[a] * u[b]) % p)
    M = np.array(rows, dtype=np.int64) % p
    return monos, linalg.nullspace(M, p, len(monos))


def _quadric_row(f, n):
    idx = {m: k for k, m in enumerate(_quadric_monomials(n))}
    row = [0] * len(idx)
    for e, c in f.terms.items():
        pos = tuple(i for i, x in enumerate(e) for _ in range(x))
        row[idx[pos]] = c
    return row


# ---------------------------------------------------------------------------
# certificate

@dataclass
class Certificate:
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return bool(self.checks) and all(c["status"] == "PASS" for c in self.checks)

    @property
    def status(self):
        return "PASS" if self.passed else "FAIL"

    def get(self, name):
        return next(c for c in self.checks if c["check"] == name)

    def to_json(self):
        return self.checks

    def dumps(self):
        return json.dumps(self.checks, sort_keys=True)


def certify_generation(labeling, field=None, fail_fast=False, max_basis=None):
    """Check that the combinatorial products generate the curve ideal.

    Runs "degree2" (span equals the degree-2 part, by linear algebra) first,
    then "generation" (equal reduced Groebner bases) and "membership" (each
    product lies in the intersection of line ideals).  With ``fail_fast``
    the Groebner-basis checks are skipped once "degree2" fails.
    """
    ring = curve_ring(labeling, field)
    p = ring.field.p
    cert = Certificate()
    gens = generator_polynomials(labeling, ring)
    n = ring.nvars

    if p:
        _, Q = quadric_space(labeling, p)
        G = np.array([_quadric_row(f, n) for f in gens], dtype=np.int64).reshape(len(gens), Q.shape[1])
        rg = linalg.rank(G, p) if len(gens) else 0
        both = linalg.rank(np.vstack([Q, G]) if len(gens) else Q, p)
        ok = rg == Q.shape[0] == both
        cert.checks.append({"check": "degree2", "status": "PASS" if ok else "FAIL",
                            "details": {"products": len(gens), "span_dim": rg, "quadric_space_dim": int(Q.shape[0])}})
        if not ok and fail_fast:
            for name in ("generation", "membership"):
                cert.checks.append({"check": name, "status": "SKIPPED", "details": {}})
            return cert

    truth = intersection_ideal(labeling, ring, max_basis=max_basis)
    comb = Ideal(ring, gens)
    same = comb == truth
    cert.checks.append({"check": "generation", "status": "PASS" if same else "FAIL",
                        "details": {"basis_size": len(truth.groebner_basis()),
                                    "generated_basis_size": len(comb.groebner_basis()) if gens else 0}})
    bad = [format_polynomial(f) for f in gens if not truth.contains(f)]
    cert.checks.append({"check": "membership", "status": "FAIL" if bad else "PASS",
                        "details": {"products": len(gens), "outside": bad}})
    return cert
