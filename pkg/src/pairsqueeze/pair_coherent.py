"""Closed-form second-moment analysis of two-mode pair coherent states.

A pair coherent state is the simultaneous eigenstate of the pair annihilator
``a1 a2`` (complex eigenvalue ``zeta``) and of the photon-number difference
``N1 - N2`` (integer eigenvalue ``q >= 0``).  Everything observable at the
level of quadrature noise follows from two numbers, the mode occupations
``n1 = n2 + q`` and ``n2``, plus ``zeta`` itself: with ``hbar = 1`` and
quadrature order ``(q1, q2, p1, p2)`` the variance matrix is

    [[n1 + 1/2,  Re z,      0,        Im z     ],
     [Re z,      n2 + 1/2,  Im z,     0        ],
     [0,         Im z,      n1 + 1/2, -Re z    ],
     [Im z,      0,         -Re z,    n2 + 1/2 ]]

whose spectrum is doubly degenerate with extremes

    e = n2 + 1/2 + q/2 -+ sqrt(q^2 + 4 |z|^2) / 2.

A state is squeezed exactly when the lower eigenvalue drops below 1/2; the
verdict is invariant under every passive (orthogonal symplectic) mix of the
two modes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainError,
    OracleCheckError,
    SeriesOverflowError,
    ZeroAmplitudeError,
)
from .linalg import as_mat4, jacobi_angle, max_abs
from .symplectic import (
    TransformMatrix,
    block_rotation,
    classify,
    heterodyne_mix,
    symplectic_form,
)

#: Largest accepted |zeta|; beyond this the normalization series overflows
#: double precision long before the sum converges.
MAX_AMPLITUDE = 1e3

#: Default relative tolerance for series termination.
SERIES_RTOL = 1e-16

#: Guard band around 1/2 for the squeezing verdict, so that states with the
#: lower eigenvalue exactly at the vacuum level classify as not squeezed.
SQUEEZE_GUARD = 1e-12

#: Residual allowed when post-verifying that a stage angle decouples its
#: 2x2 block.
_DECOUPLE_TOL = 1e-12


@dataclass(frozen=True)
class PairParams:
    """State labels: pair-annihilator eigenvalue and photon-number difference."""

    zeta: complex
    q: int

    def __post_init__(self):
        z = complex(self.zeta)
        object.__setattr__(self, "zeta", z)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise DomainError("zeta must be finite")
        if abs(z) > MAX_AMPLITUDE:
            raise DomainError(f"|zeta| = {abs(z):.4g} exceeds {MAX_AMPLITUDE:g}")
        if not isinstance(self.q, (int, np.integer)) or isinstance(self.q, bool):
            raise DomainError("q must be an integer")
        if self.q < 0:
            raise DomainError(f"q must be nonnegative, got {self.q}")
        object.__setattr__(self, "q", int(self.q))


@dataclass(frozen=True)
class SqueezeReport:
    """Single-state summary: occupations, spectrum, stage angles, the
    minimizing mixer phase and the squeezing verdict.  ``psi_star`` is NaN
    at ``zeta = 0`` where the minimizer is undefined."""

    n1: float
    n2: float
    e_down: float
    e_up: float
    theta: float
    phi: float
    psi_star: float
    squeezed: bool


def _scaled_series(q: int, r: float, rel_tol: float) -> float:
    """Sum of ``r^n q! / (n! (n+q)!)`` over ``n >= 0``.

    This is the normalization series scaled by q!, which keeps the leading
    term at 1 regardless of q.  Terms rise while ``r > n (n+q)`` and then
    decay factorially; summation stops after ten consecutive terms below
    ``rel_tol`` times the running sum.
    """
    total = 1.0
    term = 1.0
    quiet = 0
    n = 0
    while quiet < 10:
        n += 1
        term *= r / (n * (n + q))
        if not math.isfinite(term):
            raise SeriesOverflowError(
                f"series term overflowed at n={n} (|zeta|^2 = {r:.4g}, q = {q})"
            )
        total += term
        quiet = quiet + 1 if term < rel_tol * total else 0
    return total


def norm_series(params: PairParams, rel_tol: float = SERIES_RTOL) -> float:
    """Normalization sum ``sum_n |zeta|^(2n) / (n! (n+q)!)``.

    The squared norm of the unnormalized Fock expansion; the state's
    normalization constant is its inverse square root.
    """
    if not (0.0 < rel_tol <= 1e-3):
        raise DomainError(f"rel_tol must lie in (0, 1e-3], got {rel_tol:.4g}")
    r = abs(params.zeta) ** 2
    scaled = _scaled_series(params.q, r, rel_tol)
    try:
        value = scaled / math.factorial(params.q)
    except OverflowError as exc:
        raise SeriesOverflowError(f"q! overflows for q = {params.q}") from exc
    if value == 0.0 or not math.isfinite(value):
        raise SeriesOverflowError(
            f"series value {value!r} not representable for q = {params.q}"
        )
    return value


def photon_numbers(params: PairParams) -> tuple[float, float]:
    """Mean occupations ``(n1, n2)`` of the two modes.

    ``n2`` is ``|zeta|^2`` times the ratio of consecutive normalization
    sums, and ``n1 = n2 + q`` identically (the difference is sharp).
    Evaluated through the q!-scaled series so large ``q`` cannot overflow
    the intermediate factorials.
    """
    q = params.q
    r = abs(params.zeta) ** 2
    if r == 0.0:
        return float(q), 0.0
    t_q = _scaled_series(q, r, SERIES_RTOL)
    t_q1 = _scaled_series(q + 1, r, SERIES_RTOL)
    n2 = r * t_q1 / (t_q * (q + 1))
    return n2 + q, n2


def variance_matrix(params: PairParams) -> np.ndarray:
    """Quadrature variance matrix in the order ``(q1, q2, p1, p2)``.

    Symmetric positive definite, with the mode occupations on the diagonal
    and ``zeta`` itself as the only source of correlations: ``Re zeta``
    couples like quadratures of different modes (with opposite signs in the
    position and momentum sectors) and ``Im zeta`` couples position to the
    other mode's momentum.
    """
    n1, n2 = photon_numbers(params)
    b, m = params.zeta.real, params.zeta.imag
    return np.array(
        [
            [n1 + 0.5, b, 0.0, m],
            [b, n2 + 0.5, m, 0.0],
            [0.0, m, n1 + 0.5, -b],
            [m, 0.0, -b, n2 + 0.5],
        ]
    )


def _stage_eigenvalues(params: PairParams) -> tuple[float, float]:
    # Eigenvalues of [[q, Re z], [Re z, 0]]; these sit on the diagonal of
    # the variance matrix (minus its n2 + 1/2 offset) after stage one.
    q, b = params.q, params.zeta.real
    h = math.hypot(q, 2.0 * b)
    return 0.5 * (q + h), 0.5 * (q - h)


def _check_decoupled(app: float, aqq: float, apq: float, angle: float) -> None:
    c, s = math.cos(angle), math.sin(angle)
    off = apq * (c * c - s * s) - (app - aqq) * c * s
    if abs(off) > _DECOUPLE_TOL:
        raise OracleCheckError(
            f"plane rotation left residual {off:.3e} above {_DECOUPLE_TOL:.1e}"
        )


def stage1_angle(params: PairParams) -> float:
    """Angle of the position/momentum block rotation that decouples the
    same-sector couplings ``Re zeta``.

    Solves ``tan 2 theta = 2 Re zeta / q`` on the branch (-pi/4, pi/4];
    degenerate cases: 0 when ``Re zeta = 0``, pi/4 when ``q = 0`` with
    ``Re zeta != 0``.
    """
    theta = jacobi_angle(float(params.q), 0.0, params.zeta.real)
    _check_decoupled(float(params.q), 0.0, params.zeta.real, theta)
    return theta


def stage2_angle(params: PairParams) -> float:
    """Angle of the cross-plane rotation that decouples the ``Im zeta``
    couplings remaining after stage one.

    Diagonalizes ``[[l+, Im z], [Im z, l-]]`` where ``l+- = (q +-
    sqrt(q^2 + 4 (Re z)^2)) / 2``; zero when ``Im zeta = 0``.
    """
    lam_p, lam_m = _stage_eigenvalues(params)
    phi = jacobi_angle(lam_p, lam_m, params.zeta.imag)
    _check_decoupled(lam_p, lam_m, params.zeta.imag, phi)
    return phi


def analytic_spectrum(params: PairParams) -> tuple[float, float]:
    """Closed-form spectrum extremes ``(e_down, e_up)`` of the variance
    matrix; each occurs twice in the full spectrum."""
    _, n2 = photon_numbers(params)
    half_split = 0.5 * math.hypot(params.q, 2.0 * abs(params.zeta))
    center = n2 + 0.5 + 0.5 * params.q
    return center - half_split, center + half_split


def _two_plane_rotation(angle_14: float, angle_23: float) -> np.ndarray:
    m = np.eye(4)
    c, s = math.cos(angle_14), math.sin(angle_14)
    m[0, 0] = m[3, 3] = c
    m[0, 3] = s
    m[3, 0] = -s
    c, s = math.cos(angle_23), math.sin(angle_23)
    m[1, 1] = m[2, 2] = c
    m[1, 2] = s
    m[2, 1] = -s
    return m


def diagonalize(params: PairParams) -> tuple[TransformMatrix, np.ndarray]:
    """Orthogonal transformation ``r`` with ``r V r^T`` diagonal, plus that
    diagonal matrix.

    Stage one applies the block rotation of :func:`stage1_angle`, leaving a
    matrix that splits over the (q1, p2) and (q2, p1) planes.  Stage two
    rotates each plane by its own Jacobi angle; the two planes always need
    opposite rotation senses (their 2x2 blocks carry the stage-one
    eigenvalues in swapped positions), so the stage-two factor is not a
    single equal-angle cross rotation.  The diagonal entries are the doubly
    degenerate spectrum extremes in some order.
    """
    v = variance_matrix(params)
    r1 = block_rotation(stage1_angle(params)).mat
    v1 = r1 @ v @ r1.T
    angle_14 = jacobi_angle(v1[0, 0], v1[3, 3], v1[0, 3])
    angle_23 = jacobi_angle(v1[1, 1], v1[2, 2], v1[1, 2])
    rot = _two_plane_rotation(angle_14, angle_23) @ r1
    diag = rot @ v @ rot.T
    residual = max_abs(diag - np.diag(np.diag(diag)))
    if residual > 1e-10:
        raise OracleCheckError(f"diagonalization residual {residual:.3e}")
    return classify(rot), diag


def is_squeezed(params: PairParams) -> bool:
    """Passive-invariant squeezing verdict: lower spectrum extreme strictly
    below the vacuum level 1/2 (with a guard band against round-off)."""
    e_down, _ = analytic_spectrum(params)
    return e_down < 0.5 - SQUEEZE_GUARD


def _mixed_leading_entry(v: np.ndarray, psi: float) -> float:
    s = heterodyne_mix(psi)[1].mat
    return float((s @ v @ s.T)[0, 0])


def leading_entry(params: PairParams, psi: float) -> float:
    """Leading variance-matrix entry after the heterodyne mix of phase
    ``psi``: the noise of the quadrature selected by that mixer."""
    return _mixed_leading_entry(variance_matrix(params), psi)


def _golden_min(f, lo: float, hi: float, iters: int = 64) -> float:
    # Deterministic golden-section refinement; 64 halvings of a bracket a
    # few hundredths wide land far below double resolution on the abscissa.
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    c = hi - inv_phi * (hi - lo)
    d = lo + inv_phi * (hi - lo)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc <= fd:
            hi, d, fd = d, c, fc
            c = hi - inv_phi * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + inv_phi * (hi - lo)
            fd = f(d)
    return 0.5 * (lo + hi)


def heterodyne_minimizer(params: PairParams) -> tuple[float, TransformMatrix]:
    """Mixer phase minimizing the leading variance entry over the
    heterodyne family, with the corresponding transformation.

    The search is a 256-point grid over [0, 2 pi) refined by golden
    section, hence deterministic.  The minimizing phase is the phase of
    ``zeta`` plus pi.  The minimized entry equals the lower spectrum
    extreme exactly when ``q = 0``; for ``q > 0`` it exceeds it by
    ``sqrt(q^2 + 4 |zeta|^2)/2 - |zeta|``, because the equal-weight mixers
    cannot reproduce the unequal mode weights of the minimal-noise
    quadrature.

    Raises
    ------
    ZeroAmplitudeError
        At ``zeta = 0`` every phase is a minimizer.
    """
    if params.zeta == 0:
        raise ZeroAmplitudeError("minimizer undefined at zeta = 0")
    v = variance_matrix(params)

    def f(psi: float) -> float:
        return _mixed_leading_entry(v, psi)

    grid = np.linspace(0.0, 2.0 * math.pi, 256, endpoint=False)
    k = int(np.argmin([f(p) for p in grid]))
    step = 2.0 * math.pi / 256
    psi_star = float(_golden_min(f, grid[k] - step, grid[k] + step)) % (2.0 * math.pi)
    return psi_star, heterodyne_mix(psi_star)[1]


def uncertainty_floor(v) -> float:
    """Smallest eigenvalue of the Hermitian matrix ``V + (i/2) B``.

    Nonnegative (up to round-off) for every physical variance matrix; this
    is the matrix form of the Heisenberg bound.
    """
    h = as_mat4(v) + 0.5j * symplectic_form()
    return float(np.linalg.eigvalsh(h)[0])


def squeeze_report(params: PairParams) -> SqueezeReport:
    """Assemble the full single-state summary."""
    n1, n2 = photon_numbers(params)
    e_down, e_up = analytic_spectrum(params)
    psi_star = math.nan
    if params.zeta != 0:
        psi_star = heterodyne_minimizer(params)[0]
    return SqueezeReport(
        n1=n1,
        n2=n2,
        e_down=e_down,
        e_up=e_up,
        theta=stage1_angle(params),
        phi=stage2_angle(params),
        psi_star=psi_star,
        squeezed=is_squeezed(params),
    )
