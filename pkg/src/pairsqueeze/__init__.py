"""Variance-matrix squeezing analysis of two-mode pair coherent states.

The closed-form route (:mod:`pairsqueeze.pair_coherent`) computes occupations,
the variance matrix, its analytic diagonalization and the passive-invariant
squeezing verdict; the numerical route (:mod:`pairsqueeze.fock`) rebuilds the
same moments from a truncated Fock expansion and dense operators, providing
an independent cross-check.  :mod:`pairsqueeze.cli` exposes both as a command
line tool.
"""

from .errors import (
    DomainError,
    NoConvergenceError,
    NotSymmetricError,
    NotUnitaryError,
    OracleCheckError,
    PairSqueezeError,
    SeriesOverflowError,
    TruncationError,
    ZeroAmplitudeError,
)
from .fock import (
    FockState,
    QuadOps,
    default_ncut,
    numeric_first_moments,
    numeric_photons,
    numeric_variance,
    pair_state,
    quadrature_ops,
    state_vector,
)
from .linalg import SymSpectrum, jacobi_angle, mat_mul, max_abs, sym_eigen
from .pair_coherent import (
    PairParams,
    SqueezeReport,
    analytic_spectrum,
    diagonalize,
    heterodyne_minimizer,
    is_squeezed,
    leading_entry,
    norm_series,
    photon_numbers,
    squeeze_report,
    stage1_angle,
    stage2_angle,
    uncertainty_floor,
    variance_matrix,
)
from .symplectic import (
    TransformMatrix,
    block_rotation,
    classify,
    cross_rotation,
    embed_unitary,
    heterodyne_mix,
    is_orthogonal,
    is_symplectic,
    symplectic_form,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "FockState",
    "NoConvergenceError",
    "NotSymmetricError",
    "NotUnitaryError",
    "OracleCheckError",
    "PairParams",
    "PairSqueezeError",
    "QuadOps",
    "SeriesOverflowError",
    "SqueezeReport",
    "SymSpectrum",
    "TransformMatrix",
    "TruncationError",
    "ZeroAmplitudeError",
    "analytic_spectrum",
    "block_rotation",
    "classify",
    "cross_rotation",
    "default_ncut",
    "diagonalize",
    "embed_unitary",
    "heterodyne_minimizer",
    "heterodyne_mix",
    "is_orthogonal",
    "is_squeezed",
    "is_symplectic",
    "jacobi_angle",
    "leading_entry",
    "mat_mul",
    "max_abs",
    "norm_series",
    "numeric_first_moments",
    "numeric_photons",
    "numeric_variance",
    "pair_state",
    "photon_numbers",
    "quadrature_ops",
    "squeeze_report",
    "stage1_angle",
    "stage2_angle",
    "state_vector",
    "sym_eigen",
    "symplectic_form",
    "uncertainty_floor",
    "variance_matrix",
]
