"""Betti diagrams: Koszul route, explicit minimal resolutions and summaries."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from graphcurve.graph import cycle_graph, path_graph, theta_graph
from graphcurve.homology import (BettiDiagram, ResolutionIncomplete, artinian_reduction,
                                 betti_diagram, check_nkp, girth_predictions,
                                 minimal_free_resolution, summarize)
from graphcurve.idealgen import curve_ring, intersection_ideal
from graphcurve.labeling import label_edges
from graphcurve.polyalg import Ideal, PolynomialRing, hilbert_series
from graphcurve.polyalg.field import PrimeField

from conftest import data_path

P = 32003


def _ideal(n, gens):
    R = PolynomialRing(n, PrimeField(P))
    return Ideal(R, [R.parse(s) for s in gens])


def _euler_ok(I, B):
    num = list(hilbert_series(I).numerator)
    while num and num[-1] == 0:
        num.pop()
    return B.euler_polynomial() == num


SMALL = {
    "hypersurface": (3, ["x0*x1"]),
    "twisted_cubic": (4, ["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]),
    "complete_intersection": (4, ["x0*x1", "x2^2 - x3*x0"]),
    "points": (3, ["x0*x1", "x1*x2", "x0*x2"]),
}


@pytest.mark.parametrize("name", sorted(SMALL))
def test_explicit_resolution_agrees_with_koszul(name):
    I = _ideal(*SMALL[name])
    B = betti_diagram(I)
    res = minimal_free_resolution(I)
    assert res.betti() == B
    assert not res.has_unit_entries()
    assert res.composition_vanishes()
    assert _euler_ok(I, B)


def test_known_diagrams():
    assert betti_diagram(_ideal(*SMALL["hypersurface"])).entries == {(0, 0): 1, (1, 2): 1}
    tc = betti_diagram(_ideal(*SMALL["twisted_cubic"]))
    assert tc.entries == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    ci = betti_diagram(_ideal(*SMALL["complete_intersection"]))
    assert ci.entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}


@pytest.mark.parametrize("g", [path_graph(2), path_graph(4), cycle_graph(5), cycle_graph(6),
                               theta_graph(2, 2, 2)], ids=repr)
def test_curve_resolutions_cross_check(g):
    lab = label_edges(g)
    I = intersection_ideal(lab, curve_ring(lab))
    B = betti_diagram(I)
    res = minimal_free_resolution(I)
    assert res.betti() == B
    assert not res.has_unit_entries() and res.composition_vanishes()
    assert _euler_ok(I, B)


@given(st.integers(0, 10 ** 6))
@settings(max_examples=15, deadline=None)
def test_euler_identity_on_random_monomial_ideals(seed):
    rng = random.Random(seed)
    R = PolynomialRing(4, PrimeField(P))
    gens = []
    for _ in range(rng.randint(1, 4)):
        m = [0] * 4
        for _ in range(rng.randint(2, 3)):
            m[rng.randrange(4)] += 1
        gens.append(R.monomial(m))
    I = Ideal(R, gens)
    B = betti_diagram(I)
    assert _euler_ok(I, B)
    assert minimal_free_resolution(I).betti() == B


def test_trees_have_linear_resolutions():
    for d in (2, 3, 5):
        lab = label_edges(path_graph(d))
        B = betti_diagram(intersection_ideal(lab, curve_ring(lab)))
        assert B.regularity == 1


def test_pentagon_has_a_quadratic_strand():
    lab = label_edges(cycle_graph(5))
    B = betti_diagram(intersection_ideal(lab, curve_ring(lab)))
    assert B[3, 5] != 0
    assert check_nkp(B, 2, 2) and not check_nkp(B, 2, 3)


def test_reference_curve_diagram(theta, theta_ring):
    _, lab = theta
    B = betti_diagram(intersection_ideal(lab, theta_ring))
    assert B == BettiDiagram.from_text(data_path("theta443_curve_betti.txt").read_text())
    S = summarize(B, theta_ring.nvars, 1)
    assert S.is_acm and S.projective_dimension == 7


def test_explicit_resolution_on_reference_reduction(theta, theta_ring):
    """The explicit resolution of an Artinian reduction reproduces the Koszul numbers."""
    _, lab = theta
    I = intersection_ideal(lab, theta_ring)
    ring, basis, cuts = artinian_reduction(I, rng=random.Random(1))
    J = Ideal.from_basis(ring, basis)
    res = minimal_free_resolution(J)
    assert res.betti() == betti_diagram(J)
    assert res.composition_vanishes()


def test_diagram_text_and_json_round_trip(theta, theta_ring):
    text = data_path("theta443_curve_betti.txt").read_text()
    B = BettiDiagram.from_text(text)
    assert B.to_text() == text
    assert BettiDiagram.from_json(B.to_json()) == B
    assert B.totals() == [1, 26, 98, 168, 154, 72, 15, 2]


def test_resolution_guardrail_raises():
    I = _ideal(*SMALL["twisted_cubic"])
    with pytest.raises(ResolutionIncomplete) as exc:
        minimal_free_resolution(I, max_basis=3)
    assert exc.value.partial is None or not exc.value.partial.complete


def test_check_nkp_definition():
    B = BettiDiagram({(0, 0): 1, (1, 2): 3, (2, 3): 2, (2, 4): 1})
    assert check_nkp(B, 2, 1)
    assert not check_nkp(B, 2, 2)
    assert check_nkp(B, 2, 0)


def test_girth_predictions(theta):
    g, _ = theta
    pred = girth_predictions(g)
    assert pred["girth"] == 7
    assert pred["curve_fails"] == ["N", 2, 5] and pred["secant_fails"] == ["N", 3, 3]
    assert pred["cycle_betti"] == {"i": 5, "j": 7, "predicted": 2}
    assert girth_predictions(path_graph(4)) is None


def test_zero_and_unit_ideals():
    R = PolynomialRing(3, PrimeField(P))
    assert betti_diagram(Ideal(R, [])).entries == {(0, 0): 1}
    assert betti_diagram(Ideal(R, [R.one()])).entries == {}
