"""Exact combinatorics of pillow plane configurations and branch curves.

The package builds the pillow configuration of bidegree (a, b) -- two
triangulated a x b grids glued along their boundary into a triangulation
of the 2-sphere -- verifies its incidence structure, computes the
branch-curve characters (degree, nodes, cusps, turning points) of general
surface projections, and assembles the table describing how those
singularities collect on the configuration's doubled lines.  All
arithmetic is exact.
"""

from .checks import Check, Report
from .degeneration import (
    DegenerationTable,
    NPointBudget,
    TableRow,
    TableTotals,
    build_table,
    local_del_pezzo_characters,
    npoint_budget,
    render_table,
    table_to_dict,
    verify_conservation,
)
from .errors import (
    InvalidParameter,
    MalformedComplex,
    NegativeCharacter,
    NonIntegral,
    NonIntegralNodeCount,
    PillowDegError,
)
from .pillow import (
    CupleReduction,
    GridFace,
    Line,
    PillowConfig,
    QuadricFace,
    SpanDims,
    StageConfig,
    Triangle,
    build_pillow,
    config_to_dict,
    count_disjoint_line_pairs,
    cuple_reduction,
    disjoint_pairs_via_degrees,
    dot_face_adjacency,
    dot_line_intersection,
    formula_disjoint_pairs,
    is_complex_isomorphism,
    plane_stage,
    quadric_stage,
    transpose_map,
    two_surface_stage,
    verify_sphere_triangulation,
)
from .surfaces import (
    BranchCharacters,
    RamificationClasses,
    SurfaceClasses,
    branch_characters,
    del_pezzo,
    del_pezzo_characters,
    k3,
    k3_characters,
    ramification_classes,
    scroll_characters,
    scroll_p1p1,
    veronese,
    veronese_characters,
    verify_character_identities,
)

__version__ = "0.1.0"

__all__ = [
    "BranchCharacters",
    "Check",
    "CupleReduction",
    "DegenerationTable",
    "GridFace",
    "InvalidParameter",
    "Line",
    "MalformedComplex",
    "NegativeCharacter",
    "NonIntegral",
    "NonIntegralNodeCount",
    "NPointBudget",
    "PillowConfig",
    "PillowDegError",
    "QuadricFace",
    "RamificationClasses",
    "Report",
    "SpanDims",
    "StageConfig",
    "SurfaceClasses",
    "TableRow",
    "TableTotals",
    "Triangle",
    "branch_characters",
    "build_pillow",
    "build_table",
    "config_to_dict",
    "count_disjoint_line_pairs",
    "cuple_reduction",
    "del_pezzo",
    "del_pezzo_characters",
    "disjoint_pairs_via_degrees",
    "dot_face_adjacency",
    "dot_line_intersection",
    "formula_disjoint_pairs",
    "is_complex_isomorphism",
    "k3",
    "k3_characters",
    "local_del_pezzo_characters",
    "npoint_budget",
    "plane_stage",
    "quadric_stage",
    "ramification_classes",
    "render_table",
    "scroll_characters",
    "scroll_p1p1",
    "table_to_dict",
    "transpose_map",
    "two_surface_stage",
    "veronese",
    "veronese_characters",
    "verify_character_identities",
    "verify_conservation",
    "verify_sphere_triangulation",
]
