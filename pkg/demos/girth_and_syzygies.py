"""
Girth and the first nonlinear syzygy
=====================================

The shortest cycle of the graph controls where the linear strand of the
curve's resolution stops.  We look at cycles, then at a few random
admissible graphs, and compare one Betti number with a count of cycles.
"""

import random

from graphcurve.graph import cycle_graph, invariants, random_valid_graph
from graphcurve.homology import betti_diagram, check_nkp
from graphcurve.idealgen import curve_ring, intersection_ideal
from graphcurve.labeling import label_edges
from graphcurve.survey import survey_graph

# elliptic normal curves: an m-cycle fails N_{2, m-2} and nothing earlier
for m in range(4, 9):
    lab = label_edges(cycle_graph(m))
    B = betti_diagram(intersection_ideal(lab, curve_ring(lab)))
    print(m, [check_nkp(B, 2, p) for p in range(1, m - 1)], B.row(2))

# random admissible graphs of genus 2 on 10 vertices
rng = random.Random(3)
for _ in range(3):
    g = random_valid_graph(10, 2, rng)
    rec = survey_graph(g, secant=False).to_json()
    inv = invariants(g)
    print(g.edges)
    print("  girth", inv.girth, "cycles", inv.girth_cycle_count,
          "certificate", rec["certificate"]["status"], rec["observations"])
