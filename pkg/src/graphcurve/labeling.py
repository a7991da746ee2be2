"""Edge labelings of the loop-augmented graph and the line ideals they define.

Edges of the augmented graph are keyed by sorted vertex pairs; the loop added
at a degree-1 vertex v is keyed ``(v, v)``.  A label is either ``Single(i)``
(the coordinate e_i) or ``Difference(j, k)`` (e_j - e_k).  Coordinates live in
P^{d-g}, i.e. there are d - g + 1 variables x_0 .. x_{d-g}.
"""

import json
import re
from dataclasses import dataclass

import numpy as np

from .graph import genus, validate_assumptions
from .polyalg import linalg


class LabelingError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Single:
    i: int

    @property
    def indices(self):
        return (self.i,)

    def form(self):
        return {self.i: 1}

    def __str__(self):
        return f"e{self.i}"


@dataclass(frozen=True, order=True)
class Difference:
    j: int
    k: int

    def __post_init__(self):
        if self.j == self.k:
            raise LabelingError("difference label needs two distinct indices")

    @property
    def indices(self):
        return (self.j, self.k)

    def form(self):
        return {self.j: 1, self.k: -1}

    def __str__(self):
        return f"e{self.j}-e{self.k}"


_LABEL_RE = re.compile(r"^\s*e(\d+)\s*(?:-\s*e(\d+))?\s*$")


def parse_label(text):
    m = _LABEL_RE.match(text)
    if not m:
        raise LabelingError(f"bad edge label {text!r}")
    a, b = m.groups()
    return Single(int(a)) if b is None else Difference(int(a), int(b))


def format_linear_form(form, names=None):
    """``{0: 1, 6: -1}`` -> ``"x0-x6"``."""
    parts = []
    for i in sorted(form):
        c = form[i]
        name = names[i] if names else f"x{i}"
        coef = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else ("+" if parts else "")
        parts.append(f"{sign}{coef}{name}")
    return "".join(parts) or "0"


@dataclass(frozen=True)
class LinearIdeal:
    """Ideal generated by linear forms ({index: coeff} dicts) in ``nvars`` variables."""

    forms: tuple
    nvars: int

    def matrix(self, p):
        rows = []
        for f in self.forms:
            row = [0] * self.nvars
            for i, c in f.items():
                row[i] = c
            rows.append(row)
        return linalg.as_matrix(rows, p, self.nvars)

    def rank(self, p):
        return linalg.rank(self.matrix(p), p) if self.forms else 0

    def points(self, p):
        """Basis (rows) of the common zero set, as a linear subspace of k^nvars."""
        if not self.forms:
            return np.eye(self.nvars, dtype=np.int64)
        return linalg.nullspace(self.matrix(p), p, self.nvars)

    def projective_dim(self, p):
        return self.nvars - self.rank(p) - 1

    def polynomials(self, ring):
        return [ring.linear_form(f) for f in self.forms]

    def to_text(self):
        return ", ".join(format_linear_form(f) for f in self.forms)

    def __str__(self):
        return f"<{self.to_text()}>"


class Labeling:
    """A labeling of the augmented graph G~ (G plus a loop at each degree-1 vertex)."""

    def __init__(self, graph, labels, strict=True):
        self.graph = graph
        self.labels = dict(sorted(labels.items()))
        self.strict = strict
        self.ambient_dim = graph.vertex_count - genus(graph)
        self.nvars = self.ambient_dim + 1
        self._check()

    # structure ----------------------------------------------------------

    @property
    def loops(self):
        return [e[0] for e in self.labels if e[0] == e[1]]

    def augmented_edges(self):
        return list(self.labels)

    def incident(self, v):
        return [(e, lab) for e, lab in self.labels.items() if v in e]

    def edge_with_label(self, label):
        for e, lab in self.labels.items():
            if lab == label:
                return e
        raise KeyError(label)

    def indices(self):
        return sorted({i for lab in self.labels.values() for i in lab.indices})

    def differences(self):
        return [(e, lab) for e, lab in self.labels.items() if isinstance(lab, Difference)]

    def __eq__(self, other):
        return isinstance(other, Labeling) and self.graph == other.graph and self.labels == other.labels

    def __repr__(self):
        return f"Labeling({len(self.labels)} edges, P^{self.ambient_dim})"

    def _check(self):
        g = self.graph
        expected = set(g.edges) | {(v, v) for v in range(g.vertex_count) if g.degree(v) == 1}
        if set(self.labels) != expected:
            missing = sorted(expected - set(self.labels))
            extra = sorted(set(self.labels) - expected)
            raise LabelingError(f"labels must cover exactly the edges of G~ (missing {missing}, extra {extra})")
        idx = self.indices()
        if idx != list(range(self.nvars)):
            raise LabelingError(f"expected indices 0..{self.ambient_dim} ({self.nvars} of them), got {idx}")
        singles = [lab.i for lab in self.labels.values() if isinstance(lab, Single)]
        if len(singles) != len(set(singles)):
            raise LabelingError("a single index is used on two edges")
        for v in range(g.vertex_count):
            inc = [lab for _, lab in self.incident(v)]
            diffs = [lab for lab in inc if isinstance(lab, Difference)]
            if g.degree(v) == 3:
                if len(diffs) != 1:
                    raise LabelingError(f"trivalent vertex {v} must carry exactly one difference label")
                d = diffs[0]
                single_idx = sorted(lab.i for lab in inc if isinstance(lab, Single))
                if single_idx != sorted(d.indices):
                    raise LabelingError(
                        f"trivalent vertex {v}: labels {[str(x) for x in inc]} are not e_j, e_k, e_j-e_k")
            elif self.strict and len(diffs) > 1:
                raise LabelingError(f"vertex {v} carries two difference labels")
        for e, lab in self.labels.items():
            if isinstance(lab, Difference) and not any(g.degree(v) == 3 for v in set(e)):
                raise LabelingError(f"difference label {lab} on edge {e} away from any trivalent vertex")

    # export -------------------------------------------------------------

    def to_json(self):
        out = []
        for e, lab in self.labels.items():
            edge = {"loop": e[0]} if e[0] == e[1] else list(e)
            out.append({"edge": edge, "label": str(lab)})
        return {"labels": out}

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)


def label_edges(g, allow_assumption_violations=False):
    """Deterministic labeling.

    Vertices are visited in ascending order; at a trivalent vertex the two
    edges towards its smallest neighbours get fresh single indices j < k and
    the third gets e_j - e_k.  When assumptions are overridden and that third
    edge ends at a vertex already carrying a difference label, the next
    candidate edge is used instead.  All remaining edges, loops included, get
    fresh single indices in ascending edge order.
    """
    report = validate_assumptions(g)
    if max(g.degrees()) > 3:
        raise LabelingError("vertex of degree > 3")
    if not report.connected:
        raise LabelingError("graph is not connected")
    if not report.strictly_subtrivalent:
        raise LabelingError("graph is not strictly subtrivalent")
    if not report.ok and not allow_assumption_violations:
        raise LabelingError("assumption violation: " + "; ".join(report.violations))
    if report.trivalent_separation < 2:
        raise LabelingError("adjacent trivalent vertices cannot be labeled")

    labels = {}
    nxt = 0
    has_diff = set()
    for v in g.trivalent():
        nbrs = sorted(g.neighbors(v))
        diff_nbr = nbrs[2]
        if diff_nbr in has_diff:
            for cand in (nbrs[1], nbrs[0]):
                if cand not in has_diff:
                    diff_nbr = cand
                    break
        a, b = [w for w in nbrs if w != diff_nbr]
        j, k = nxt, nxt + 1
        nxt += 2
        labels[(min(v, a), max(v, a))] = Single(j)
        labels[(min(v, b), max(v, b))] = Single(k)
        labels[(min(v, diff_nbr), max(v, diff_nbr))] = Difference(j, k)
        has_diff.update((v, diff_nbr))
    rest = [e for e in g.edges if e not in labels]
    rest += [(v, v) for v in range(g.vertex_count) if g.degree(v) == 1]
    for e in sorted(rest):
        labels[e] = Single(nxt)
        nxt += 1
    return Labeling(g, labels, strict=report.ok)


def ingest_labeling(g, doc, allow_assumption_violations=False):
    """Build a Labeling from the JSON labeling document (str or parsed dict)."""
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise LabelingError(f"malformed JSON: {exc}") from exc
    labels = {}
    for entry in doc.get("labels", []):
        edge = entry.get("edge")
        if isinstance(edge, dict) and "loop" in edge:
            key = (int(edge["loop"]),) * 2
        elif "loop" in entry:
            key = (int(entry["loop"]),) * 2
        elif isinstance(edge, list) and len(edge) == 2:
            u, v = int(edge[0]), int(edge[1])
            key = (min(u, v), max(u, v))
        else:
            raise LabelingError(f"bad edge reference {entry!r}")
        if key in labels:
            raise LabelingError(f"edge {key} labeled twice")
        labels[key] = parse_label(entry["label"])
    report = validate_assumptions(g)
    if not report.ok and not allow_assumption_violations:
        raise LabelingError("assumption violation: " + "; ".join(report.violations))
    return Labeling(g, labels, strict=report.ok)


def line_ideal(labeling, v):
    """Linear forms cutting out the line L_v."""
    g = labeling.graph
    if not 0 <= v < g.vertex_count:
        raise ValueError(f"no vertex {v}")
    inc = [lab for _, lab in labeling.incident(v)]
    n = labeling.nvars
    if g.degree(v) == 3:
        d = next(lab for lab in inc if isinstance(lab, Difference))
        drop = set(d.indices)
        return LinearIdeal(tuple({i: 1} for i in range(n) if i not in drop), n)
    drop = set()
    binomials = []
    for lab in inc:
        drop.update(lab.indices)
        if isinstance(lab, Difference):
            binomials.append(lab.form())
    forms = [{i: 1} for i in range(n) if i not in drop]
    forms.extend(binomials)
    forms.sort(key=lambda f: (min(f), len(f)))
    return LinearIdeal(tuple(forms), n)


def line_ideals(labeling):
    return [line_ideal(labeling, v) for v in range(labeling.graph.vertex_count)]


def relabel_involution(labeling, v):
    """Swap the labels e_j and e_j - e_k at trivalent vertex v."""
    g = labeling.graph
    if g.degree(v) != 3:
        raise LabelingError(f"vertex {v} is not trivalent")
    inc = dict(labeling.incident(v))
    diff_edge = next(e for e, lab in inc.items() if isinstance(lab, Difference))
    d = inc[diff_edge]
    single_edge = next(e for e, lab in inc.items() if lab == Single(d.j))
    labels = dict(labeling.labels)
    labels[diff_edge], labels[single_edge] = labels[single_edge], labels[diff_edge]
    return Labeling(g, labels, strict=labeling.strict)


def involution_substitution(labeling, v):
    """The coordinate change x_k -> x_j - x_k matching relabel_involution at v.

    Returned as a function acting on linear forms ({index: coeff} dicts).
    """
    d = next(lab for _, lab in labeling.incident(v) if isinstance(lab, Difference))
    j, k = d.j, d.k

    def apply(form):
        out = dict(form)
        c = out.pop(k, 0)
        if c:
            out[j] = out.get(j, 0) + c
            out[k] = -c
        return {i: a for i, a in out.items() if a}

    return apply
