"""Sparse polynomial systems over the algebraic torus.

Polyhedral tools (Newton polytopes, mixed volumes, mixed subdivisions),
resultant matrices (Sylvester, Macaulay, Canny-Emiris, bilinear Koszul),
Schur-complement eigenvalue solving, and Gröbner bases over graded
semigroup algebras with FGLM.
"""

__version__ = "0.1.0"

from .eigen import (
    SolutionSet,
    eigen_decomposition,
    residual,
    schur_multiplication_matrix,
    solve_bilinear_koszul,
    solve_torus,
    split_canny_emiris,
)
from .errors import (
    CoordinateRecoveryFailed,
    DegenerateLifting,
    DeltaNotGeneric,
    DimensionMismatch,
    DimensionUnstable,
    EigenConvergenceError,
    PolySyntaxError,
    ResidualFailure,
    SingularM11,
    ToricSolveError,
)
from .linalg import exact_determinant
from .matrices import (
    MacaulayMatrix,
    canny_emiris_matrix,
    koszul_bilinear_matrix,
    macaulay_matrix_dense,
    sylvester_matrix,
)
from .poly import PolySystem, SparsePoly, evaluate, parse_polynomial, support
from .polytope import LatticePolytope, lattice_points, minkowski_sum, mixed_volume, newton_polytope
from .subdivision import Lifting, generic_mixed_subdivision, mixed_cells, mixed_subdivision
from .toric_gb import (
    GradedMonomialOrder,
    build_algebra,
    default_setup,
    dehomogenize_gb,
    fglm_lex,
    homogenize_system,
    macaulay_matrix_graded,
    multiplication_maps,
    truncated_gb,
)

__all__ = [
    "__version__",
    "CoordinateRecoveryFailed",
    "DegenerateLifting",
    "DeltaNotGeneric",
    "DimensionMismatch",
    "DimensionUnstable",
    "EigenConvergenceError",
    "GradedMonomialOrder",
    "LatticePolytope",
    "Lifting",
    "MacaulayMatrix",
    "PolySyntaxError",
    "PolySystem",
    "ResidualFailure",
    "SingularM11",
    "SolutionSet",
    "SparsePoly",
    "ToricSolveError",
    "build_algebra",
    "canny_emiris_matrix",
    "default_setup",
    "dehomogenize_gb",
    "eigen_decomposition",
    "evaluate",
    "exact_determinant",
    "fglm_lex",
    "generic_mixed_subdivision",
    "homogenize_system",
    "koszul_bilinear_matrix",
    "lattice_points",
    "macaulay_matrix_dense",
    "macaulay_matrix_graded",
    "minkowski_sum",
    "mixed_cells",
    "mixed_subdivision",
    "mixed_volume",
    "multiplication_maps",
    "newton_polytope",
    "parse_polynomial",
    "residual",
    "schur_multiplication_matrix",
    "solve_bilinear_koszul",
    "solve_torus",
    "split_canny_emiris",
    "support",
    "sylvester_matrix",
    "truncated_gb",
]
