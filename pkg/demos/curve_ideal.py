"""
From a graph to the ideal of its graph curve
=============================================

The theta graph with paths of 4, 4 and 3 edges between two trivalent
vertices gives ten lines in P^8.  We label its edges, write down the
line ideals, and compare the 26 products of label forms with the ideal
of the union of the lines.
"""

from pathlib import Path

import graphcurve
from graphcurve.homology import betti_diagram, summarize
from graphcurve.idealgen import certify_generation, curve_ring, intersection_ideal
from graphcurve.idealgen import combinatorial_generators
from graphcurve.labeling import line_ideals
from graphcurve.polyalg import hilbert_series

data = Path(graphcurve.__file__).parent / "data"

# the graph and a fixed labeling of its edges
g = graphcurve.parse_graph((data / "theta443_graph.json").read_text())
lab = graphcurve.ingest_labeling(g, (data / "theta443_labeling.json").read_text())
print(graphcurve.validate_assumptions(g).ok, graphcurve.invariants(g).to_json())

# each vertex becomes a line; trivalent vertices get coordinate planes
for v, li in enumerate(line_ideals(lab)):
    print(f"L{v}: <{li.to_text()}>")

# quadrics from pairs of labels that cannot both be nonzero on any line
products = combinatorial_generators(lab)
print(len(products), "products, e.g.", ", ".join(map(str, products[-4:])))

# do they cut out the whole arrangement?  three independent checks
cert = certify_generation(lab)
print(cert.dumps())

# the Betti diagram of S/I, computed over GF(32003)
ring = curve_ring(lab)
I = intersection_ideal(lab, ring)
B = betti_diagram(I)
print(B.to_text())
hs = hilbert_series(I)
print(summarize(B, ring.nvars, hs.projective_dim, k=2).to_json(), "degree", hs.degree)
