"""Exact Hodge-theoretic invariants of toric complete intersections.

The package computes, over arbitrary-precision rationals, Euler
characteristics of sheaves of (alternating, symmetric, tensor) differential
forms and Hodge numbers of quasi-smooth complete intersections in complete
simplicial toric varieties, starting from purely combinatorial data: a fan
and the Newton supports of the defining equations.
"""

from .errors import ConsistencyError, InputError
from .fans import (
    AdaptedSubfan,
    DegreeMatrix,
    Fan,
    TorusCIProblem,
    adapted_subfan,
    all_cones,
    degrees_of,
    is_complete,
    is_regular,
    is_simplicial,
    normal_fan,
    orbit_problem,
    restrict_supports,
    stellar_subdivide_to_simplicial,
    validate,
)
from .forms import (
    chi_alt,
    chi_alt_hilbert,
    chi_sym,
    chi_tensor,
    coeff_x0_yp,
    y_truncated_expand,
)
from .hilbert import HilbertContext, build_context, chi_structure_sheaf, h_of_s, n_I_s
from .hodge import clear_epq_memo, epq_c_ci, epq_torus, hodge_compact
from .hodge_tables import EPQTable, zero_table
from .lattice import (
    AffineReduction,
    Polytope,
    RationalPolyhedron,
    SmithDecomposition,
    affine_lattice_reduction,
    convex_hull,
    lattice_points,
    minkowski_support,
    primitive,
    smith_normal_form,
)
from .wps import (
    RationalFunction,
    Weights,
    residue_infinity,
    residue_zero,
    wps_chi,
    wps_fan,
    wps_hilbert,
    wps_hodge,
    wps_lattice_count,
)

__version__ = "0.1.0"

__all__ = [
    "AdaptedSubfan",
    "AffineReduction",
    "ConsistencyError",
    "DegreeMatrix",
    "EPQTable",
    "Fan",
    "HilbertContext",
    "InputError",
    "Polytope",
    "RationalFunction",
    "RationalPolyhedron",
    "SmithDecomposition",
    "TorusCIProblem",
    "Weights",
    "adapted_subfan",
    "affine_lattice_reduction",
    "all_cones",
    "build_context",
    "chi_alt",
    "chi_alt_hilbert",
    "chi_structure_sheaf",
    "chi_sym",
    "chi_tensor",
    "clear_epq_memo",
    "coeff_x0_yp",
    "convex_hull",
    "degrees_of",
    "epq_c_ci",
    "epq_torus",
    "h_of_s",
    "hodge_compact",
    "is_complete",
    "is_regular",
    "is_simplicial",
    "lattice_points",
    "minkowski_support",
    "n_I_s",
    "normal_fan",
    "orbit_problem",
    "primitive",
    "residue_infinity",
    "residue_zero",
    "restrict_supports",
    "smith_normal_form",
    "stellar_subdivide_to_simplicial",
    "validate",
    "wps_chi",
    "wps_fan",
    "wps_hilbert",
    "wps_hodge",
    "wps_lattice_count",
    "y_truncated_expand",
    "zero_table",
]
