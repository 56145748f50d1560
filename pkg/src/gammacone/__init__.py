"""Bakry-Emery curvature and cone calculus on finite graphs.

The package computes the gradient forms Gamma1 / Gamma2 and the graph
Laplacian, builds full and partial cones with closed-form cone
operators, evaluates pointwise / uniform / conical curvature exactly as
finite eigenproblems, and audits the resulting Poincare, spectral-gap,
and isoperimetric inequalities on exhaustive graph corpora.

Hot kernels (Jacobi eigensolver, Cheeger subset scan, canonical
labeling) run from a compiled extension when built, with a pure-Python
fallback selected at import; see gammacone._kernels.ACTIVE_BACKEND.
"""

__version__ = "0.1.0"

from ._kernels import ACTIVE_BACKEND
from .errors import DisconnectedGraphError, EmptyGraphError, GraphFormatError
from .graphs import (
    Graph,
    VertexFunction,
    ball,
    completion,
    connected_components,
    is_connected,
    make_complete,
    make_cycle,
    make_hypercube,
    make_path,
    sphere,
)
from .io import format_edge_list, format_graph6, parse_edge_list, parse_graph6
from .gamma import (
    QuadraticForm,
    divergence_check,
    gamma1,
    gamma1_form,
    gamma2,
    gamma2_form,
    laplacian,
    laplacian_matrix,
)
from .cone import (
    ConeGraph,
    cone_delta_gamma1,
    cone_gamma1,
    cone_gamma1_f_deltaf,
    cone_gamma2,
    cone_laplacian,
    full_cone,
    partial_cone,
    verify_cone_lemmas,
    verify_cone_lift,
)
from .curvature import (
    CurvatureResult,
    DimensionParam,
    cd_holds_at,
    cric,
    kc_max,
    maximizer_analysis,
    poincare_check,
    ric_pointwise,
    ric_uniform,
)
from .spectral import (
    CheegerResult,
    SpectralResult,
    ccd_from_gap,
    cheeger,
    eigensolve_symmetric,
    lambda1,
    verify_ccd_spectral_gap,
    verify_dam,
)
from .enumeration import all_graphs, canonical_key, connected_graphs
from .rng import XorShift64Star

__all__ = [
    "ACTIVE_BACKEND",
    "CheegerResult",
    "ConeGraph",
    "CurvatureResult",
    "DimensionParam",
    "DisconnectedGraphError",
    "EmptyGraphError",
    "Graph",
    "GraphFormatError",
    "QuadraticForm",
    "SpectralResult",
    "VertexFunction",
    "XorShift64Star",
    "all_graphs",
    "ball",
    "canonical_key",
    "ccd_from_gap",
    "cd_holds_at",
    "cheeger",
    "completion",
    "cone_delta_gamma1",
    "cone_gamma1",
    "cone_gamma1_f_deltaf",
    "cone_gamma2",
    "cone_laplacian",
    "connected_components",
    "connected_graphs",
    "cric",
    "divergence_check",
    "eigensolve_symmetric",
    "format_edge_list",
    "format_graph6",
    "full_cone",
    "gamma1",
    "gamma1_form",
    "gamma2",
    "gamma2_form",
    "is_connected",
    "kc_max",
    "lambda1",
    "laplacian",
    "laplacian_matrix",
    "make_complete",
    "make_cycle",
    "make_hypercube",
    "make_path",
    "maximizer_analysis",
    "parse_edge_list",
    "parse_graph6",
    "partial_cone",
    "poincare_check",
    "ric_pointwise",
    "ric_uniform",
    "sphere",
    "verify_ccd_spectral_gap",
    "verify_cone_lemmas",
    "verify_cone_lift",
    "verify_dam",
]
