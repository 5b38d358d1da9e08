"""Recognize graphs whose independence number equals their annihilation number."""

from .errors import GraphFormatError, InvariantError, OracleLimitError, ResourceExhausted
from .fpt_gap import GapDecision, decide_gap, vertex_cover_at_most
from .graph_core import (
    AnnihilationSummary,
    DegreeSequence,
    Graph,
    annihilation_number,
    degree_sequence,
    delete_vertex,
    generate_random_graph,
    parse_graph,
    serialize_graph,
    verify_independent_set,
)
from .matching import Matching, matching_number, maximum_matching, unsaturated_vertices
from .recognition import Certificate, recognize_equal
from .twosat import Assignment, Lit, TwoSatFormula, solve

__all__ = [
    "AnnihilationSummary", "Assignment", "Certificate", "DegreeSequence", "GapDecision",
    "Graph", "GraphFormatError", "InvariantError", "Lit", "Matching", "OracleLimitError",
    "ResourceExhausted", "TwoSatFormula", "annihilation_number", "decide_gap",
    "degree_sequence", "delete_vertex", "generate_random_graph", "matching_number",
    "maximum_matching", "parse_graph", "recognize_equal", "serialize_graph", "solve",
    "unsaturated_vertices", "verify_independent_set", "vertex_cover_at_most",
]
