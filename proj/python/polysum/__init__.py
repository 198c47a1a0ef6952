"""Exact Minkowski sums of convex polytopes.

All coordinates are exact rationals: pass ints, strings like "3/4", or
fractions.Fraction; floats are rejected. Results come back as Fraction.
"""

from polysum._polysum import (  # noqa: F401
    ApexMismatch,
    CapDisconnected,
    Cone,
    DimensionMismatch,
    EmptyPolytope,
    FileParseError,
    HalfSpace,
    IndexOutOfRange,
    InternalInconsistency,
    MinkowskiDecomposition,
    NoParallelEdge,
    NotFullDimensional,
    NotMinkowskiVertex,
    PolyhedralCap,
    Polytope,
    PolysumError,
    TraversalIncomplete,
    Unbounded,
    ValidationReport,
    connected_in_graph,
    convex_hull_of_cones,
    cross_polytope,
    cube,
    dual_cone,
    facets_from_refined_cone,
    intersect_cones,
    is_minkowski_vertex_pair,
    minkowski_sum,
    minkowski_vertex_cone,
    neighbour_candidates,
    normal_fan,
    oracle_membership,
    oracle_sum,
    oracle_sum_points,
    parse_polytope,
    polar_dual,
    polyhedral_cap,
    primal_cone,
    seed_minkowski_vertex,
    simplex,
    sum_dual_brute,
    sum_dual_optimized,
    sum_primal,
    unique_argmax,
    write_polytope,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
