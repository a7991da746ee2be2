"""Graph curves as line arrangements: embeddings, ideals, Betti diagrams and secants."""

from .graph import (Graph, GraphFormatError, generate_family, invariants, parse_graph,
                    validate_assumptions)
from .homology import (BettiDiagram, ResolutionIncomplete, betti_diagram, check_nkp,
                       girth_predictions, minimal_free_resolution, summarize)
from .idealgen import (certify_generation, combinatorial_generators, intersection_ideal,
                       quadric_space)
from .labeling import (Difference, Labeling, LabelingError, Single, ingest_labeling,
                       label_edges, line_ideal, relabel_involution)
from .secant import secant_degree_prediction, secant_ideal, span_ideal

__version__ = "0.1.0"

__all__ = [
    "Graph", "GraphFormatError", "generate_family", "invariants", "parse_graph",
    "validate_assumptions", "BettiDiagram", "ResolutionIncomplete", "betti_diagram",
    "check_nkp", "girth_predictions", "minimal_free_resolution", "summarize",
    "certify_generation", "combinatorial_generators", "intersection_ideal", "quadric_space",
    "Difference", "Labeling", "LabelingError", "Single", "ingest_labeling", "label_edges",
    "line_ideal", "relabel_involution", "secant_degree_prediction", "secant_ideal", "span_ideal",
]
