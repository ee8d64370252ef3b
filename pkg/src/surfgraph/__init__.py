"""Orientation classes and counting polynomials of graphs on surfaces.

A ribbon graph is a graph with a cyclic order of edge ends around each
vertex, equivalently a cellular embedding in an orientable surface.
This package enumerates its acyclic, totally cyclic, boundary acyclic,
and totally bi-walkable orientations, counts its tensions and flows
(cyclic-group, face-local, balanced, and bounded-integer), recovers the
four counting polynomials exactly, and verifies the duality and
reciprocity identities that tie all of these together across the map
and its dual.
"""

from .enumeration import (
    bao_witness_vector,
    count_balanced_flows,
    count_flows,
    count_integral_flows,
    count_integral_local_tensions,
    count_local_tensions,
    count_nz_balanced_flows,
    count_nz_flows,
    count_nz_local_tensions,
    count_nz_tensions,
    count_tensions,
    integral_local_tension_reciprocity_pairs,
    interpolate,
    poly_balanced_flow,
    poly_flow,
    poly_local_tension,
    poly_tension,
    quasi_integral_flows,
    quasi_integral_local_tensions,
    reciprocity_pairs_balanced_flow,
    reciprocity_pairs_flow,
    reciprocity_pairs_local_tension,
    reciprocity_pairs_tension,
)
from .errors import (
    BadModulus,
    BadPairing,
    DuplicateEdge,
    GraphMismatch,
    InvalidCycle,
    NoFit,
    NonIntegerCoefficients,
    NonPermutation,
    NotBoundaryAcyclic,
    OddDartCount,
    SurfGraphError,
    TooLarge,
    UnknownEdge,
    UnknownFace,
)
from .generator import CorpusSpec, corpus_stats, generate
from .orientations import (
    Orientation,
    OrientationClass,
    all_orientations,
    count_class,
    cw_faces,
    dual_orientation,
    enumerate_class,
    is_acyclic,
    is_boundary_acyclic,
    is_totally_biwalkable,
    is_totally_cyclic,
    orientation_from_string,
    orientation_to_string,
    tbo_generating_poly_formula,
    tbo_generating_polynomial,
    tbo_histogram,
)
from .polynomials import QuasiPolynomial, fit_quasipolynomial, poly_eval
from .ribbonmap import (
    Cocycle,
    Cycle,
    EulerData,
    RibbonGraph,
    abstract_contract,
    boundary,
    build,
    canonical_code,
    check_cycle,
    contract,
    cocycles,
    cycles,
    delete,
    double_slash,
    dual,
    dumps,
    euler_data,
    face_matrix,
    from_json_dict,
    fundamental_cycles,
    is_separating,
    loads,
    signed_boundary,
    to_json_dict,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
