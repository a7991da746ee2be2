"""Combinatorial generators of the curve ideal and the generation certificate."""

import json

import pytest

from graphcurve.golden import compare_ideal
from graphcurve.graph import cycle_graph, path_graph
from graphcurve.homology import betti_diagram
from graphcurve.idealgen import (QuadricProduct, certify_generation, combinatorial_generators,
                                 curve_ring, generator_polynomials, intersection_ideal,
                                 quadric_space)
from graphcurve.labeling import Difference, Single, label_edges, line_ideals, relabel_involution
from graphcurve.polyalg import Ideal, hilbert_series

from conftest import data_path


def test_reference_generators_match_golden(theta, theta_ring):
    _, lab = theta
    gens = generator_polynomials(lab, theta_ring)
    diff = compare_ideal(gens, data_path("theta443_curve_generators.txt").read_text(), theta_ring)
    assert diff.match, diff.differences
    assert len(gens) == 26
    names = {str(q) for q in combinatorial_generators(lab)}
    assert "x7*(x3-x4)" in names and "x8*(x0-x6)" in names


def test_unpruned_products_generate_the_same_ideal(theta, theta_ring):
    _, lab = theta
    full = combinatorial_generators(lab, prune=False)
    pruned = combinatorial_generators(lab)
    assert set(map(str, pruned)) <= set(map(str, full))
    R = theta_ring
    assert Ideal(R, [q.polynomial(R) for q in full]) == Ideal(R, [q.polynomial(R) for q in pruned])


def test_every_product_vanishes_on_every_line(theta, theta_ring):
    _, lab = theta
    R = theta_ring
    lines = [Ideal(R, li.polynomials(R)) for li in line_ideals(lab)]
    for q in combinatorial_generators(lab, prune=False):
        f = q.polynomial(R)
        assert all(L.contains(f) for L in lines), str(q)


def test_quadric_space_matches_intersection_degree_two(theta, theta_ring):
    _, lab = theta
    _, Q = quadric_space(lab)
    hs = hilbert_series(intersection_ideal(lab, theta_ring))
    n = lab.nvars
    assert Q.shape[0] == n * (n + 1) // 2 - hs.hilbert_function(2) == 26


@pytest.mark.parametrize("g", [path_graph(2), path_graph(5), cycle_graph(4), cycle_graph(5),
                               cycle_graph(6), cycle_graph(8)], ids=repr)
def test_certificate_passes_on_small_graphs(g):
    cert = certify_generation(label_edges(g))
    assert cert.passed, cert.dumps()
    assert [c["check"] for c in cert.checks] == ["degree2", "generation", "membership"]


def test_small_generator_counts():
    assert len(generator_polynomials(label_edges(cycle_graph(5)))) == 5
    assert len(generator_polynomials(label_edges(cycle_graph(6)))) == 9
    assert [str(f) for f in generator_polynomials(label_edges(path_graph(2)))] == ["x0*x2"]


def test_override_graph_with_bivalent_subdivision(k4_labeling):
    _, Q = quadric_space(k4_labeling)
    assert Q.shape[0] == 18
    cert = certify_generation(k4_labeling)
    assert cert.get("degree2")["details"]["quadric_space_dim"] == 18
    assert cert.passed


def test_triangle_fails_certificate():
    lab = label_edges(cycle_graph(3), allow_assumption_violations=True)
    cert = certify_generation(lab)
    assert cert.status == "FAIL"
    short = certify_generation(lab, fail_fast=True)
    assert short.get("generation")["status"] in ("SKIPPED", "FAIL")


def test_certificate_json_is_stable(theta):
    _, lab = theta
    a = certify_generation(lab).dumps()
    assert a == certify_generation(lab).dumps()
    want = json.loads(data_path("theta443_certificate.json").read_text())
    assert [c["status"] for c in json.loads(a)] == [c["status"] for c in want]


def test_quadric_product_rejects_repeated_index():
    with pytest.raises(ValueError):
        QuadricProduct(Single(3), Difference(3, 4), "mixed")
    assert str(QuadricProduct(Single(7), Difference(3, 4), "mixed")) == "x7*(x3-x4)"


def test_betti_numbers_do_not_depend_on_labeling_choice(theta):
    _, lab = theta
    R = curve_ring(lab)
    base = betti_diagram(intersection_ideal(lab, R))
    for v in lab.graph.trivalent():
        other = relabel_involution(lab, v)
        assert betti_diagram(intersection_ideal(other, R)) == base
