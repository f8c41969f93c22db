"""Dense 4x4 real linear algebra: products, norms and a deterministic
symmetric eigensolver.

Everything here works on plain ``numpy`` arrays of shape ``(4, 4)``.  The
eigensolver is a cyclic Jacobi scheme with a fixed sweep order, so repeated
calls on the same input produce bit-identical output; it serves as the
generic spectral oracle against which closed-form results are checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergenceError, NotSymmetricError

#: Cyclic pivot order used by one Jacobi sweep.
_SWEEP = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def as_mat4(a) -> np.ndarray:
    """Coerce ``a`` to a float64 ``(4, 4)`` array and validate finiteness."""
    m = np.asarray(a, dtype=float)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def max_abs(a) -> float:
    """Largest absolute entry, the norm used for every tolerance check."""
    return float(np.max(np.abs(np.asarray(a))))


def mat_mul(a, b) -> np.ndarray:
    """Product of two 4x4 matrices."""
    return as_mat4(a) @ as_mat4(b)


def jacobi_angle(app: float, aqq: float, apq: float) -> float:
    """Rotation angle t in (-pi/4, pi/4] such that the plane rotation
    ``[[c, s], [-s, c]]`` (c = cos t, s = sin t) applied as ``G M G^T``
    annihilates the off-diagonal entry of ``M = [[app, apq], [apq, aqq]]``.

    The branch is closed on the right: the boundary case t = -pi/4 is
    folded to +pi/4 (both angles decouple the block; the fold keeps the
    result deterministic and single-valued).
    """
    t = 0.5 * math.atan2(2.0 * apq, app - aqq)
    if t > math.pi / 4:
        t -= math.pi / 2
    elif t <= -math.pi / 4:
        t += math.pi / 2
    return t


def _plane_rotation(p: int, q: int, t: float) -> np.ndarray:
    g = np.eye(4)
    c, s = math.cos(t), math.sin(t)
    g[p, p] = g[q, q] = c
    g[p, q] = s
    g[q, p] = -s
    return g


def _off_max(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.max(np.abs(off)))


@dataclass(frozen=True)
class SymSpectrum:
    """Eigenvalues sorted ascending and the matching orthonormal column
    eigenvectors, so ``vectors @ diag(values) @ vectors.T`` rebuilds the
    input."""

    values: np.ndarray
    vectors: np.ndarray


def sym_eigen(a, tol: float = 1e-13, max_sweeps: int = 100) -> SymSpectrum:
    """Diagonalize a symmetric 4x4 matrix by cyclic Jacobi rotations.

    Parameters
    ----------
    a : array_like
        Real symmetric matrix; ``max_abs(a - a.T)`` must not exceed ``tol``.
    tol : float
        Symmetry tolerance on input and convergence threshold on the largest
        off-diagonal entry.  The default suits matrices of order-unity scale;
        it is an absolute threshold.
    max_sweeps : int
        Sweep budget.  Exhausting it raises ``NoConvergenceError``, which for
        a 4x4 symmetric input only happens when ``tol`` is below the
        round-off floor of the matrix scale.

    Returns
    -------
    SymSpectrum
        Eigenvalues ascending; ties keep the original diagonal order.
    """
    work = as_mat4(a).copy()
    if max_abs(work - work.T) > tol:
        raise NotSymmetricError(
            f"asymmetry {max_abs(work - work.T):.3e} exceeds tol {tol:.3e}"
        )

    rot = np.eye(4)  # accumulated product of plane rotations
    sweeps = 0
    while _off_max(work) > tol:
        if sweeps >= max_sweeps:
            raise NoConvergenceError(
                f"off-diagonal {_off_max(work):.3e} above {tol:.3e} "
                f"after {max_sweeps} sweeps"
            )
        for p, q in _SWEEP:
            if work[p, q] == 0.0:
                continue
            g = _plane_rotation(p, q, jacobi_angle(work[p, p], work[q, q], work[p, q]))
            work = g @ work @ g.T
            work[p, q] = work[q, p] = 0.0
            rot = g @ rot
        sweeps += 1

    # work = rot @ a @ rot.T, so the eigenvector columns sit in rot.T.
    diag = np.diag(work)
    order = np.argsort(diag, kind="stable")
    return SymSpectrum(values=diag[order].copy(), vectors=rot.T[:, order].copy())
