"""Graded Betti numbers, minimal free resolutions and what they say about S/I.

Two independent routes are provided.

* :func:`betti_diagram` cuts S/I down by random linear forms that are
  certified regular (the Hilbert series must not change apart from a factor
  (1 - t)), which leaves the graded Betti numbers unchanged, and then reads
  them off Koszul homology of the small quotient.
* :func:`minimal_free_resolution` builds a minimal graded free resolution
  with explicit differentials, one internal degree at a time.

Both need an upper bound on the regularity.  For an Artinian quotient it is
the top nonzero degree; otherwise a random change of coordinates is tried
until the initial ideal is stable, where the Eliahou-Kervaire bound applies.
"""

import os
import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from .graph import INF, girth, invariants
from .polyalg import linalg
from .polyalg.groebner import Reducer, groebner_basis
from .polyalg.hilbert import HilbertSeries, minimalize, monomial_numerator
from .polyalg.ideal import Ideal
from .polyalg.poly import PolynomialRing, monomials_of_degree


class ResolutionIncomplete(RuntimeError):
    """A guardrail was hit; ``partial`` holds what was computed so far."""

    def __init__(self, msg, partial=None):
        super().__init__(msg)
        self.partial = partial


def _env_int(name, default):
    v = os.environ.get(name)
    return int(v) if v else default


def default_limits():
    return {
        "max_degree": _env_int("GRAPHCURVE_MAX_DEGREE", 64),
        "max_basis": _env_int("GRAPHCURVE_MAX_BASIS", 6000),
    }


# ---------------------------------------------------------------------------
# Betti diagrams

@dataclass(frozen=True)
class BettiDiagram:
    """beta_{i,j} of S/I, stored sparsely as {(i, j): value}."""

    entries: dict
    complete: bool = True

    def __post_init__(self):
        object.__setattr__(self, "entries", {k: v for k, v in sorted(self.entries.items()) if v})

    def __getitem__(self, ij):
        return self.entries.get(tuple(ij), 0)

    def __eq__(self, other):
        return isinstance(other, BettiDiagram) and self.entries == other.entries

    __hash__ = None

    @property
    def projective_dimension(self):
        return max((i for i, _ in self.entries), default=0)

    @property
    def regularity(self):
        return max((j - i for i, j in self.entries), default=0)

    def totals(self):
        return [sum(v for (i, _), v in self.entries.items() if i == k)
                for k in range(self.projective_dimension + 1)]

    def row(self, r):
        """[beta_{i, i+r} for i = 0..pd]."""
        return [self[i, i + r] for i in range(self.projective_dimension + 1)]

    def euler_polynomial(self):
        """Coefficients of sum (-1)^i beta_{i,j} t^j."""
        top = max((j for _, j in self.entries), default=0)
        out = [0] * (top + 1)
        for (i, j), v in self.entries.items():
            out[j] += (-1) ** i * v
        while out and out[-1] == 0:
            out.pop()
        return out

    def to_text(self):
        """Row r holds beta_{i, i+r}; '.' marks zeros, the first row holds totals."""
        pd = self.projective_dimension
        head = [""] + [str(i) for i in range(pd + 1)]
        rows = [head, ["total:"] + [str(t) for t in self.totals()]]
        for r in range(self.regularity + 1):
            rows.append([f"{r}:"] + [str(v) if v else "." for v in self.row(r)])
        widths = [max(len(row[c]) for row in rows) for c in range(len(head))]
        lines = []
        for row in rows:
            cells = [row[0].rjust(widths[0])] + [row[c].rjust(widths[c]) for c in range(1, len(row))]
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        entries = {}
        for line in text.strip().splitlines():
            parts = line.split()
            if not parts or not parts[0].endswith(":") or parts[0] == "total:":
                continue
            r = int(parts[0][:-1])
            for i, cell in enumerate(parts[1:]):
                if cell != ".":
                    entries[(i, i + r)] = int(cell)
        return cls(entries)

    def to_json(self):
        return [[i, j, v] for (i, j), v in self.entries.items()]

    @classmethod
    def from_json(cls, rows):
        return cls({(i, j): v for i, j, v in rows})


# ---------------------------------------------------------------------------
# helpers on graded quotients

def _hilbert(ring, basis):
    lms = [g.lm for g in basis]
    return HilbertSeries(tuple(monomial_numerator(lms, ring.nvars)), ring.nvars)


def _random_linear(ring, rng, nfree):
    p = ring.field.p or 10007
    return [rng.randrange(1, p) for _ in range(nfree)]


def _cut_last_variable(ring, basis, coeffs):
    """Substitute x_{n-1} -> sum coeffs[i] x_i; returns generators in n-1 variables."""
    n = ring.nvars
    small = PolynomialRing(n - 1, ring.field, "grevlex")
    images = small.gens() + [small.linear_form(coeffs)]
    return small, [g.substitute(images, small) for g in basis]


def artinian_reduction(ideal, rng=None, attempts=4, max_basis=None):
    """Cut S/I by linear forms certified regular on it.

    Returns ``(ring, basis, cuts)``: the smaller ring, a reduced Groebner
    basis there, and the number of linear forms cut.  The Betti numbers of
    the result over the smaller ring equal those of S/I over S.
    """
    rng = rng or random.Random(0)
    ring = ideal.ring
    basis = ideal.groebner_basis()
    if ring.order.name != "grevlex":
        ring = ring.with_order("grevlex")
        basis = groebner_basis([ring.from_dict(g.terms) for g in basis], ring=ring, max_basis=max_basis)
    hs = _hilbert(ring, basis)
    cuts = 0
    while hs.krull_dim > 0 and ring.nvars > 1:
        for _ in range(attempts):
            coeffs = _random_linear(ring, rng, ring.nvars - 1)
            small, gens = _cut_last_variable(ring, basis, coeffs)
            gens = [f for f in gens if f]
            new_basis = groebner_basis(gens, ring=small, max_basis=max_basis) if gens else []
            new_hs = _hilbert(small, new_basis)
            if new_hs.numerator == hs.numerator:
                ring, basis, hs = small, new_basis, new_hs
                cuts += 1
                break
        else:
            break  # no regular linear form found: depth reached
    return ring, basis, cuts


def _is_stable(monos):
    gens = minimalize(monos)
    gset = gens

    def member(m):
        return any(all(a <= b for a, b in zip(g, m)) for g in gset)

    for u in gens:
        top = max((i for i, e in enumerate(u) if e), default=-1)
        for j in range(top):
            w = list(u)
            w[top] -= 1
            w[j] += 1
            if not member(tuple(w)):
                return False
    return True


def regularity_bound(ring, basis, rng=None, attempts=5, max_basis=None):
    """Upper bound for reg(S/I).

    Exact top degree when S/I is Artinian.  Otherwise, after a random linear
    change of coordinates, reg(S/I) <= reg(S/in(I)); if in(I) is stable the
    latter is its top generator degree minus one.
    """
    if not basis:
        return 0
    hs = _hilbert(ring, basis)
    if hs.krull_dim == 0:
        return max(len(hs.h_vector) - 1, 0)
    lms = [g.lm for g in basis]
    if _is_stable(lms):
        return max(sum(m) for m in lms) - 1
    rng = rng or random.Random(1)
    p = ring.field.p or 10007
    n = ring.nvars
    for _ in range(attempts):
        images = [ring.linear_form([rng.randrange(p) for _ in range(n)]) for _ in range(n)]
        gens = [g.substitute(images, ring) for g in basis]
        gb = groebner_basis([f for f in gens if f], ring=ring, max_basis=max_basis)
        lms = [g.lm for g in gb]
        if _is_stable(lms):
            return max(sum(m) for m in lms) - 1
    raise ResolutionIncomplete("could not certify a regularity bound")


def _standard_monomials(ring, lms, t):
    return sorted((m for m in monomials_of_degree(ring.nvars, t)
                   if not any(all(a <= b for a, b in zip(g, m)) for g in lms)),
                  key=ring.order.key, reverse=True)


# ---------------------------------------------------------------------------
# Koszul homology route

def koszul_betti(ring, basis, max_row, max_basis=None):
    """beta_{i,i+r}(S/I) for r <= max_row from Koszul homology of S/I."""
    n = ring.nvars
    p = ring.field.p
    lms = [g.lm for g in basis]
    reducer = Reducer(basis, ring)
    std = [_standard_monomials(ring, lms, t) for t in range(max_row + 2)]
    idx = [{m: k for k, m in enumerate(s)} for s in std]
    dims = [len(s) for s in std]
    if max_basis is not None and max(dims) * comb(n, n // 2) > max_basis * 50:
        raise ResolutionIncomplete("Koszul complex too large")

    # mult[t][v]: matrix of y_v : A_t -> A_{t+1}
    mult = []
    for t in range(max_row + 1):
        mats = []
        for v in range(n):
            M = np.zeros((dims[t + 1], dims[t]), dtype=np.int64)
            for c, m in enumerate(std[t]):
                mm = list(m)
                mm[v] += 1
                mm = tuple(mm)
                if mm in idx[t + 1]:
                    M[idx[t + 1][mm], c] = 1
                else:
                    for mono, coef in reducer.reduce_terms({mm: 1}).items():
                        M[idx[t + 1][mono], c] = coef
            mats.append(M % p if p else M)
        mult.append(mats)

    subsets = [list(combinations(range(n), i)) for i in range(n + 1)]
    sub_index = [{s: k for k, s in enumerate(ss)} for ss in subsets]

    def rank_at(i, r):
        # d: wedge^i (x) A_r -> wedge^{i-1} (x) A_{r+1}
        if i == 0 or r < 0 or r > max_row or dims[r] == 0 or dims[r + 1] == 0:
            return 0
        rows = len(subsets[i - 1]) * dims[r + 1]
        cols = len(subsets[i]) * dims[r]
        D = np.zeros((rows, cols), dtype=np.int64)
        for fi, F in enumerate(subsets[i]):
            for s, v in enumerate(F):
                G = F[:s] + F[s + 1:]
                gi = sub_index[i - 1][G]
                block = mult[r][v] if s % 2 == 0 else (-mult[r][v]) % p
                D[gi * dims[r + 1]:(gi + 1) * dims[r + 1], fi * dims[r]:(fi + 1) * dims[r]] = block
        return linalg.rank(D, p)

    ranks = {}
    for r in range(max_row + 1):
        for i in range(1, n + 1):
            ranks[(i, r)] = rank_at(i, r)
    entries = {}
    for r in range(max_row + 1):
        for i in range(n + 1):
            b = comb(n, i) * dims[r] - ranks.get((i, r), 0) - ranks.get((i + 1, r - 1), 0)
            if b:
                entries[(i, i + r)] = b
    return BettiDiagram(entries)


def betti_diagram(ideal, rng=None, max_basis=None):
    """Graded Betti numbers of S/I (exact over the ideal's field)."""
    if not ideal.is_homogeneous():
        raise ValueError("Betti numbers need a homogeneous ideal")
    limits = default_limits()
    max_basis = max_basis if max_basis is not None else limits["max_basis"]
    rng = rng or random.Random(20240607)
    if not ideal.gens:
        return BettiDiagram({(0, 0): 1})
    basis = ideal.groebner_basis()
    if any(g.degree() == 0 for g in basis):
        return BettiDiagram({})
    ring, small_basis, _ = artinian_reduction(ideal, rng=rng, max_basis=max_basis)
    if not small_basis:
        return BettiDiagram({(0, 0): 1})
    R = regularity_bound(ring, small_basis, rng=rng, max_basis=max_basis)
    return koszul_betti(ring, small_basis, R, max_basis=max_basis)


# ---------------------------------------------------------------------------
# explicit minimal resolution

@dataclass
class Resolution:
    """Minimal graded free resolution of S/I.

    ``degrees[i]`` lists the generator degrees of F_i (F_0 = S).
    ``maps[i]`` (i >= 1) lists, for each generator of F_i, its image in F_{i-1}
    as ``{generator index of F_{i-1}: Polynomial}``.
    """

    ring: object
    degrees: list
    maps: list
    complete: bool = True
    note: str = ""

    def betti(self):
        entries = {}
        for i, degs in enumerate(self.degrees):
            for d in degs:
                entries[(i, d)] = entries.get((i, d), 0) + 1
        return BettiDiagram(entries, complete=self.complete)

    def has_unit_entries(self):
        return any(f.degree() == 0 for m in self.maps[1:] for img in m for f in img.values() if f)

    def composition_vanishes(self):
        """d_{i-1} o d_i == 0 for every i >= 2."""
        ring = self.ring
        for i in range(2, len(self.maps)):
            for img in self.maps[i]:
                total = {}
                for b, f in img.items():
                    for c, h in self.maps[i - 1][b].items():
                        total[c] = total.get(c, ring.zero()) + f * h
                if any(v for v in total.values()):
                    return False
        return True


def minimal_free_resolution(ideal, max_homological_degree=None, max_basis=None, rng=None):
    """Minimal free resolution of S/I by linear algebra in each internal degree.

    For step i and degree j the kernel of d_i on (F_i)_j is compared with
    the part S_1 * ker(d_i)_{j-1} already generated; a complement becomes
    the new generators of F_{i+1} in degree j, so no differential has a
    constant entry.  Degrees are bounded by i + 1 + reg(S/I).
    """
    limits = default_limits()
    max_basis = max_basis if max_basis is not None else limits["max_basis"]
    max_hd = max_homological_degree if max_homological_degree is not None else limits["max_degree"]
    ring = ideal.ring
    if ring.order.name != "grevlex":
        ring = ring.with_order("grevlex")
        ideal = Ideal(ring, [ring.from_dict(g.terms) for g in ideal.gens])
    p = ring.field.p
    if not p:
        raise ValueError("explicit resolutions are implemented over GF(p) only")
    if not ideal.is_homogeneous():
        raise ValueError("resolution needs a homogeneous ideal")
    n = ring.nvars
    basis = ideal.groebner_basis() if ideal.gens else []
    res = Resolution(ring, [[0]], [None])
    if any(g.degree() == 0 for g in basis):
        return Resolution(ring, [], [None])
    if not basis:
        return res
    R = regularity_bound(ring, basis, rng=rng, max_basis=max_basis)
    lms = [g.lm for g in basis]
    reducer = Reducer(basis, ring)
    hs = _hilbert(ring, basis)

    mono_cache = {}

    def monos(t):
        if t not in mono_cache:
            mono_cache[t] = sorted(monomials_of_degree(n, t), key=ring.order.key, reverse=True) if t >= 0 else []
        return mono_cache[t]

    def module_basis(degs, j):
        out = []
        for a, da in enumerate(degs):
            for m in monos(j - da):
                out.append((a, m))
        return out

    std_cache = {}

    def std(j):
        if j not in std_cache:
            s = _standard_monomials(ring, lms, j)
            std_cache[j] = (s, {m: k for k, m in enumerate(s)})
        return std_cache[j]

    i = 0
    while True:
        if i >= max_hd:
            res.complete = False
            res.note = f"stopped at homological degree {i}"
            return res
        degs = res.degrees[i]
        target_degs = res.degrees[i - 1] if i >= 1 else None
        lo = min(degs) + 1
        hi = i + 1 + R
        new_degs, new_maps = [], []
        K_prev = None  # basis rows of ker d_i in degree j-1, with its module basis
        for j in range(lo, hi + 1):
            src = module_basis(degs, j)
            if len(src) > max_basis:
                res.complete = False
                res.note = f"degree slice of size {len(src)} exceeds max_basis={max_basis}"
                raise ResolutionIncomplete(res.note, partial=res)
            src_idx = {b: k for k, b in enumerate(src)}
            # expected kernel dimension from exactness of F_i -> ... -> F_0 -> S/I
            kdim = sum((-1) ** (i - k) * sum(comb(j - d + n - 1, n - 1) for d in res.degrees[k] if d <= j)
                       for k in range(i + 1)) - (-1) ** i * hs.hilbert_function(j)
            # part generated from degree j-1: S_1 * ker(d_i)_{j-1}
            ech = linalg.Echelon(len(src), p, capacity=max(kdim, 1))
            if K_prev is not None and len(K_prev[0]):
                Kmat, prev_src = K_prev
                for v in range(n):
                    if ech.rank >= kdim:
                        break
                    cols = []
                    for (a, m) in prev_src:
                        mm = list(m)
                        mm[v] += 1
                        cols.append(src_idx[(a, tuple(mm))])
                    shifted = np.zeros((Kmat.shape[0], len(src)), dtype=np.int64)
                    shifted[:, cols] = Kmat
                    ech.add(shifted, stop=kdim)
            if ech.rank < kdim:
                # new generators live in degree j: find the kernel explicitly
                if i == 0:
                    tgt, tgt_idx = std(j)
                    M = np.zeros((len(tgt), len(src)), dtype=np.int64)
                    for c, (_, m) in enumerate(src):
                        for mono, coef in reducer.reduce_terms({m: 1}).items():
                            M[tgt_idx[mono], c] = coef
                else:
                    tgt = module_basis(target_degs, j)
                    tgt_idx = {b: k for k, b in enumerate(tgt)}
                    M = np.zeros((len(tgt), len(src)), dtype=np.int64)
                    for c, (a, m) in enumerate(src):
                        for b, f in res.maps[i][a].items():
                            for mono, coef in f.terms.items():
                                mm = tuple(x + y for x, y in zip(mono, m))
                                M[tgt_idx[(b, mm)], c] = (M[tgt_idx[(b, mm)], c] + coef) % p
                N = linalg.nullspace(M % p, p, len(src))
                if N.shape[0] != kdim:
                    raise AssertionError("kernel dimension disagrees with the Hilbert function")
                for vec in N:
                    before = ech.rank
                    if ech.add(vec, stop=kdim) > before:
                        new_degs.append(j)
                        new_maps.append(_vector_to_image(ring, src, vec % p, i))
                    if ech.rank == kdim:
                        break
            elif ech.rank > kdim:
                raise AssertionError("generated part exceeds kernel dimension")
            Kmat = ech.rows()[0]
            K_prev = (Kmat, src)
        if not new_degs:
            break
        res.degrees.append(new_degs)
        res.maps.append(new_maps)
        i += 1
    return res


def _vector_to_image(ring, src, vec, i):
    """Coefficient vector on (F_i)_j -> {generator of F_i: Polynomial}."""
    img = {}
    for c in np.flatnonzero(vec):
        a, m = src[c]
        img.setdefault(a, {})[m] = int(vec[c])
    if i == 0:
        # F_1 generators are elements of S = F_0 with one generator
        pass
    return {a: ring.from_dict(t) for a, t in img.items()}


# ---------------------------------------------------------------------------
# summaries and predictions

@dataclass(frozen=True)
class HomologicalSummary:
    regularity: int  # of S/I
    projective_dimension: int
    codimension: int
    is_acm: bool
    nkp: dict = field(default_factory=dict)

    @property
    def ideal_regularity(self):
        return self.regularity + 1

    def to_json(self):
        return {
            "regularity": self.regularity,
            "ideal_regularity": self.ideal_regularity,
            "pd": self.projective_dimension,
            "codim": self.codimension,
            "acm": self.is_acm,
            "nkp": {f"N_{k},{p}": v for (k, p), v in sorted(self.nkp.items())},
        }


def summarize(B, nvars, scheme_dim, k=None):
    """Regularity, projective dimension, codimension and the ACM flag.

    ``scheme_dim`` is the projective dimension of V(I) (Krull dim of S/I minus 1).
    """
    if not B.complete:
        raise ValueError("cannot summarize an incomplete Betti diagram")
    codim = (nvars - 1) - scheme_dim
    pd = B.projective_dimension
    nkp = {}
    if k is not None:
        for p_ in range(1, pd + 1):
            nkp[(k, p_)] = check_nkp(B, k, p_)
    return HomologicalSummary(B.regularity, pd, codim, pd == codim, nkp)


def check_nkp(B, k, p):
    """N_{k,p}: for 1 <= i <= p, beta_{i,j} != 0 only when j = i + k - 1."""
    for (i, j), v in B.entries.items():
        if 1 <= i <= p and v and j != i + k - 1:
            return False
    return True


def girth_predictions(g):
    """Predicted syzygy failures from the girth m of g (None for forests).

    The curve fails N_{2,m-2}; its secant variety fails N_{3,m-4} (m >= 5);
    when d = 2g+1+p with m-2 <= p, beta_{m-2,m} is conjectured to equal the
    number of m-cycles.
    """
    m = girth(g)
    if m == INF:
        return None
    inv = invariants(g)
    d = g.vertex_count
    p = d - 2 * inv.genus - 1
    out = {
        "girth": m,
        "curve_fails": ["N", 2, m - 2],
        "secant_fails": ["N", 3, m - 4] if m - 4 >= 1 else None,
        "cycle_betti": None,
    }
    if m - 2 <= p:
        out["cycle_betti"] = {"i": m - 2, "j": m, "predicted": inv.girth_cycle_count}
    return out
