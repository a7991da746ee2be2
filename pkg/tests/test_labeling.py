"""Edge labelings, line ideals and their incidence geometry."""

import json
from itertools import combinations

import numpy as np
import pytest

from graphcurve.graph import cycle_graph, path_graph, subdivided_k4, theta_graph
from graphcurve.idealgen import arrangement_ideal, curve_ring, intersection_ideal
from graphcurve.labeling import (Difference, LabelingError, Single, ingest_labeling,
                                 involution_substitution, label_edges, line_ideal, line_ideals,
                                 parse_label, relabel_involution)
from graphcurve.polyalg import Ideal, ideal_intersection, ideal_product
from graphcurve.polyalg import linalg

from conftest import data_path

P = 32003


def _meet_dim(a, b):
    """Projective dimension of L_a cap L_b (-1 when disjoint)."""
    M = np.vstack([a.matrix(P), b.matrix(P)])
    return a.nvars - linalg.rank(M, P) - 1


def _labelings():
    graphs = [path_graph(3), cycle_graph(5), cycle_graph(7), theta_graph(2, 2, 2),
              theta_graph(3, 2, 2)]
    return [label_edges(g) for g in graphs]


@pytest.mark.parametrize("lab", _labelings() + [None], ids=lambda x: repr(x))
def test_lines_meet_exactly_along_edges(lab, theta):
    lab = lab or theta[1]
    g = lab.graph
    lines = line_ideals(lab)
    for li in lines:
        assert li.projective_dim(P) == 1
    for u, v in combinations(range(g.vertex_count), 2):
        expect = 0 if g.has_edge(u, v) else -1
        assert _meet_dim(lines[u], lines[v]) == expect, (u, v)


@pytest.mark.parametrize("lab", _labelings(), ids=lambda x: repr(x))
def test_lines_span_ambient_space(lab):
    pts = np.vstack([li.points(P) for li in line_ideals(lab)])
    assert linalg.rank(pts, P) == lab.nvars


def test_reference_line_ideals(theta):
    _, lab = theta
    assert lab.nvars == 9 and lab.ambient_dim == 8
    # trivalent vertex: the coordinate plane of its difference label's indices
    assert line_ideal(lab, 3).to_text() == "x1, x2, x3, x4, x5, x7, x8"
    # bivalent vertex next to a difference-labelled edge
    assert line_ideal(lab, 2).to_text() == "x0-x6, x1, x2, x3, x4, x5, x7"
    assert line_ideal(lab, 5).to_text() == "x0, x3, x4, x5, x6, x7, x8"


def test_automatic_labeling_is_valid_and_deterministic():
    g = theta_graph(2, 2, 3)
    a, b = label_edges(g), label_edges(g)
    assert a == b
    assert a.indices() == list(range(a.nvars))
    assert len(a.differences()) == 2
    leaf = label_edges(path_graph(3))
    assert sorted(leaf.loops) == [0, 2]


def test_labeling_round_trip(theta):
    g, lab = theta
    assert ingest_labeling(g, lab.dumps()) == lab
    assert json.loads(lab.dumps()) == lab.to_json()


def test_corrupted_labeling_rejected(theta):
    g, _ = theta
    doc = json.loads(data_path("theta443_labeling.json").read_text())
    for entry in doc["labels"]:
        if entry["label"] == "e0-e6":
            entry["label"] = "e0-e5"
    with pytest.raises(LabelingError):
        ingest_labeling(g, doc)


@pytest.mark.parametrize("mutate", [
    lambda d: d["labels"].pop(),
    lambda d: d["labels"].append({"edge": [0, 5], "label": "e9"}),
    lambda d: d["labels"].__setitem__(0, {"edge": [0, 1], "label": "e8"}),
    lambda d: d["labels"].__setitem__(0, {"edge": [0, 1], "label": "x7"}),
])
def test_malformed_labelings(theta, mutate):
    g, _ = theta
    doc = json.loads(data_path("theta443_labeling.json").read_text())
    mutate(doc)
    with pytest.raises(LabelingError):
        ingest_labeling(g, doc)


def test_violating_graph_needs_override():
    g = subdivided_k4(1)
    with pytest.raises(LabelingError):
        label_edges(g)
    lab = label_edges(g, allow_assumption_violations=True)
    assert not lab.strict and lab.nvars == 8


def test_parse_label():
    assert parse_label("e3") == Single(3)
    assert parse_label(" e0 - e6 ") == Difference(0, 6)
    with pytest.raises(LabelingError):
        parse_label("e1-e1")


@pytest.mark.parametrize("lab", _labelings() + [None], ids=lambda x: repr(x))
def test_involution_is_an_involution_and_a_coordinate_change(lab, theta):
    lab = lab or theta[1]
    for v in lab.graph.trivalent():
        twice = relabel_involution(relabel_involution(lab, v), v)
        assert twice == lab
        once = relabel_involution(lab, v)
        sub = involution_substitution(lab, v)
        for w in range(lab.graph.vertex_count):
            old = line_ideal(lab, w)
            new = line_ideal(once, w)
            image = type(old)(tuple(sub(f) for f in old.forms), old.nvars)
            # same row space
            A, B = image.matrix(P), new.matrix(P)
            assert linalg.rank(np.vstack([A, B]), P) == linalg.rank(A, P) == linalg.rank(B, P)


def test_arrangement_splits_along_a_cycle(theta):
    """I_G = I_H cap I_gamma, with H the complement of a path's interior and gamma a cycle."""
    _, lab = theta
    R = curve_ring(lab)
    H = [0, 1, 2, 3, 7, 8, 9]
    cyc = [3, 4, 5, 6, 7, 8, 9]
    IH, IC = arrangement_ideal(lab, H, R), arrangement_ideal(lab, cyc, R)
    I = intersection_ideal(lab, R)
    assert ideal_intersection(IH, IC) == I
    lin = lambda J: [f for f in J.groebner_basis() if f.degree() == 1]  # noqa: E731
    assert sorted(str(f) for f in lin(IH)) == ["x1", "x2"]
    assert all(len(f) == 1 for f in IC.groebner_basis())  # monomial

    def rest(J):
        used = {f.lm.index(1) for f in lin(J)}
        return [f for f in J.groebner_basis()
                if f.degree() > 1 and not any(m[i] for m in f.terms for i in used)]

    LL = ideal_product(Ideal(R, lin(IH)), Ideal(R, lin(IC)))
    assert Ideal(R, LL.gens + rest(IH) + rest(IC)) == I
