"""Exact mixed Ehrhart theory for lattice polytopes.

Lattice-point counts, Ehrhart and multivariate Ehrhart polynomials, discrete
mixed volumes, mixed Ehrhart polynomials and mixed h*-vectors, with exact
rational arithmetic throughout.
"""

__version__ = "0.1.0"

from .ehrhart import (
    EhrhartPolynomial,
    HStarVector,
    MixedVolumeTable,
    ehrhart,
    hstar,
    hstar_from_polynomial,
    mixed_volume_table,
    multivariate_ehrhart,
    volume,
)
from .enumeration import CountResult, count_points, count_weighted_sum, enumerate_points
from .geometry import (
    GeometryError,
    LatticePolytope,
    Location,
    contains,
    dilate,
    face_in_direction,
    facet_normals,
    halfspace_description,
    minkowski_sum,
    minkowski_sum_all,
    translate,
)
from .io import CollectionSpec, InputError, builtin, cube, segment, simplex
from .kernels import backend
from .mixed import (
    ConsistencyError,
    HypothesisError,
    MixedEhrhartResult,
    MixedHStarVector,
    PolytopeCollection,
    bernstein_mixed_volume,
    dmv,
    me_from_multivariate,
    me_second,
    me_top,
    mixed_ehrhart,
    mixed_hstar,
    mixed_hstar_direct,
    single_polytope_dmv,
    single_polytope_me,
)
from .polynomial import MultivariatePolynomial, UnivariatePolynomial
from .roots import (
    asymptotic_limit,
    eulerian,
    find_min_r,
    is_log_concave,
    is_real_rooted,
    is_unimodal,
    isolate_real_roots,
    scan_dilates,
)
from .suites import VerificationLedger, run_paper_suite, run_property_suite

__all__ = [name for name in dir() if not name.startswith("_")]
