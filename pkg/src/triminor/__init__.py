"""Exact graph-minor and triangle-structure toolkit for small graphs."""

from .canon import canonical_cert, is_isomorphic
from .coloring import ChromaticResult, chromatic_number
from .generate import GenSpec, generate, generate_count
from .graph6 import parse_graph6, read_corpus, write_corpus, write_graph6
from .graphs import (
    EdgeTriangleReport,
    Graph,
    complement,
    complete,
    complete_multipartite,
    contract_edge,
    double_axle_wheel,
    induced,
    k_tree,
    make_graph,
    mader_bound_check,
    min_triangle_edge,
    named_graph,
    petersen,
    petersen_complement,
    total_triangles,
    triangles_on_edge,
)
from .minors import (
    MinorWitness,
    RootedK3Outcome,
    apex_augment_check,
    double_apex_check,
    has_clique_minor,
    has_minor,
    kr_minor_verdict,
    rooted_k3,
    two_disjoint_paths,
    validate_minor_witness,
    vertex_connectivity,
)
from .reports import ReportLine, emit_report, summarize
from .rigidity import StressVerdict, stress_space_dim, whiteley_reduce
from .verify import (
    CHECK_IDS,
    alpha_inequality_check,
    density_premise,
    density_verdict,
    is_split_graph,
    load_corpus,
    run_check,
)

__all__ = [
    "CHECK_IDS",
    "ChromaticResult",
    "EdgeTriangleReport",
    "GenSpec",
    "Graph",
    "MinorWitness",
    "ReportLine",
    "RootedK3Outcome",
    "StressVerdict",
    "alpha_inequality_check",
    "apex_augment_check",
    "canonical_cert",
    "chromatic_number",
    "complement",
    "complete",
    "complete_multipartite",
    "contract_edge",
    "density_premise",
    "density_verdict",
    "double_apex_check",
    "double_axle_wheel",
    "emit_report",
    "generate",
    "generate_count",
    "has_clique_minor",
    "has_minor",
    "induced",
    "is_isomorphic",
    "is_split_graph",
    "k_tree",
    "kr_minor_verdict",
    "load_corpus",
    "make_graph",
    "mader_bound_check",
    "min_triangle_edge",
    "named_graph",
    "parse_graph6",
    "petersen",
    "petersen_complement",
    "read_corpus",
    "rooted_k3",
    "run_check",
    "stress_space_dim",
    "summarize",
    "total_triangles",
    "triangles_on_edge",
    "two_disjoint_paths",
    "validate_minor_witness",
    "vertex_connectivity",
    "whiteley_reduce",
    "write_corpus",
    "write_graph6",
]
