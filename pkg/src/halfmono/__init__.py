"""Exact solver and verifier for half-monochromatic colorings of plane
graphs with even polygonal faces."""

from .coloring import (
    Coloring,
    baseline_coloring,
    check_half_monochromatic,
    check_proper,
    coloring_from_regions,
)
from .dividing import (
    Cycle,
    DividingSystem,
    DivisionTree,
    RegionDecomposition,
    assemble_dividing_system,
    build_division_tree,
    decompose_regions,
    extract_cycles,
)
from .independence import MatchingResult, alpha_bruteforce, alpha_via_konig, maximum_matching
from .instance_io import (
    InstanceFile,
    RenderSpec,
    StyleOptions,
    build,
    cycle_instance,
    generate_instance,
    grid_instance,
    parse_instance,
    parse_instance_text,
    prism_instance,
    render_svg,
    serialize_instance,
    subdivide_edge,
    tutte_embedding,
)
from .medial import MedialEdge, MedialGraph, build_medial_graph, face_matchings
from .oracle import OracleResult, chi_f_bruteforce
from .plane_graph import (
    Bipartition,
    Face,
    PlaneGraph,
    ValidationReport,
    build_plane_graph,
    compute_bipartition,
    validate_even_polygonal,
)
from .search import (
    AuditReport,
    SearchResult,
    SweepReport,
    audit_claims,
    exact_chi_f,
    sweep_dividing_systems,
    verify_theorem_bound,
)

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "Bipartition",
    "Coloring",
    "Cycle",
    "DividingSystem",
    "DivisionTree",
    "Face",
    "InstanceFile",
    "MatchingResult",
    "MedialEdge",
    "MedialGraph",
    "OracleResult",
    "PlaneGraph",
    "RegionDecomposition",
    "RenderSpec",
    "SearchResult",
    "StyleOptions",
    "SweepReport",
    "ValidationReport",
    "alpha_bruteforce",
    "alpha_via_konig",
    "assemble_dividing_system",
    "audit_claims",
    "baseline_coloring",
    "build",
    "build_division_tree",
    "build_medial_graph",
    "build_plane_graph",
    "check_half_monochromatic",
    "check_proper",
    "chi_f_bruteforce",
    "coloring_from_regions",
    "compute_bipartition",
    "cycle_instance",
    "decompose_regions",
    "exact_chi_f",
    "extract_cycles",
    "face_matchings",
    "generate_instance",
    "grid_instance",
    "maximum_matching",
    "parse_instance",
    "parse_instance_text",
    "prism_instance",
    "render_svg",
    "serialize_instance",
    "subdivide_edge",
    "sweep_dividing_systems",
    "tutte_embedding",
    "validate_even_polygonal",
    "verify_theorem_bound",
]
