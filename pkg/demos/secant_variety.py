"""
The secant variety of a line arrangement
=========================================

Two lines span a plane when they meet and a 3-space otherwise, so the
secant variety of the arrangement is a union of planes and 3-spaces.
Here we build it for the theta(4,4,3) curve and read off its invariants.
"""

from pathlib import Path

import graphcurve
from graphcurve.homology import betti_diagram
from graphcurve.idealgen import curve_ring
from graphcurve.polyalg import hilbert_series
from graphcurve.secant import candidate_spans, prune_spans, secant_degree_prediction, secant_ideal
from graphcurve.survey import regularity_conventions

data = Path(graphcurve.__file__).parent / "data"
g = graphcurve.parse_graph((data / "theta443_graph.json").read_text())
lab = graphcurve.ingest_labeling(g, (data / "theta443_labeling.json").read_text())

spans = candidate_spans(lab, 1)
kept = prune_spans(spans)
print(len(spans), "pairs of lines,", len(kept), "spans not inside another")
print("span dimensions:", sorted({s.span_dim for s in kept}))

S = secant_ideal(lab, 1, curve_ring(lab))
gens = S.ideal.minimal_generators()
print(len(gens), "minimal generators of degree", sorted({f.degree() for f in gens}))

hs = hilbert_series(S.ideal)
print("dimension", hs.projective_dim, "degree", hs.degree,
      "predicted", secant_degree_prediction(g.vertex_count, graphcurve.invariants(g).genus)[0])

B = betti_diagram(S.ideal)
print(B.to_text())
# 'regularity' is read three ways; only some of them give 3
print(regularity_conventions(B))
