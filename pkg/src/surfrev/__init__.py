"""surfrev: numerical verification of minimal/maximal revolution surfaces,
helicoids, and their Gauss maps in 3-dimensional Minkowski space.

Two independent computation routes back every result: exact truncated
Taylor-jet arithmetic and a finite-difference oracle.  The claim layer turns
the catalog's asserted identities into PASS / FAIL / FLAGGED verdicts.
"""

from .catalog import CatalogEntry, build, get_entry, list_entries, ruled_decomposition
from .claims import (
    ClaimResult,
    bour_match,
    run_claims,
    verify_isometry_same_coords,
    verify_minimality,
    verify_pointwise_one_type,
    verify_prop18_suite,
    verify_same_gauss_map,
)
from .geometry import (
    CurvatureSample,
    FundamentalForms,
    GaussMapSample,
    SurfacePatch,
    delta_gauss_map,
    fundamental_forms,
    gauss_map,
    gaussian_curvature_ext,
    gaussian_curvature_intrinsic,
    laplace_beltrami,
    mean_curvature,
    pointwise_k,
    second_gaussian_curvature,
)
from .jets import Jet2, fd_oracle, jet_arith, jet_func
from .lorentz import (
    CausalCharacter,
    LVec3,
    NormMode,
    causal_character,
    is_zero,
    lorentz_cross,
    lorentz_dot,
    lorentz_normalize,
)
from .ruled import RuledSurface, RuledType, classify_ruled, constancy_along_rulings

__version__ = "0.1.0"

__all__ = [
    "CatalogEntry", "build", "get_entry", "list_entries", "ruled_decomposition",
    "ClaimResult", "bour_match", "run_claims", "verify_isometry_same_coords",
    "verify_minimality", "verify_pointwise_one_type", "verify_prop18_suite",
    "verify_same_gauss_map",
    "CurvatureSample", "FundamentalForms", "GaussMapSample", "SurfacePatch",
    "delta_gauss_map", "fundamental_forms", "gauss_map",
    "gaussian_curvature_ext", "gaussian_curvature_intrinsic",
    "laplace_beltrami", "mean_curvature", "pointwise_k",
    "second_gaussian_curvature",
    "Jet2", "fd_oracle", "jet_arith", "jet_func",
    "CausalCharacter", "LVec3", "NormMode", "causal_character", "is_zero",
    "lorentz_cross", "lorentz_dot", "lorentz_normalize",
    "RuledSurface", "RuledType", "classify_ruled", "constancy_along_rulings",
    "__version__",
]
