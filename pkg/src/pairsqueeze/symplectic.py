"""Canonical-transformation layer for two modes.

Quadratures are ordered ``(q1, q2, p1, p2)``.  A real 4x4 matrix ``S`` is a
canonical (symplectic) transformation when it preserves the commutation form
returned by :func:`symplectic_form`; the passive, photon-number-conserving
transformations are exactly the orthogonal symplectic ones, obtained by
embedding a 2x2 unitary via :func:`embed_unitary`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotUnitaryError
from .linalg import as_mat4, max_abs

#: Default tolerance for the group-membership predicates.
MEMBERSHIP_TOL = 1e-10

#: Unitarity tolerance for 2x2 inputs to :func:`embed_unitary`.
UNITARY_TOL = 1e-12


def symplectic_form() -> np.ndarray:
    """Commutation form of ``(q1, q2, p1, p2)``: identity blocks in the
    upper-right / lower-left corners with opposite signs."""
    b = np.zeros((4, 4))
    b[0, 2] = b[1, 3] = 1.0
    b[2, 0] = b[3, 1] = -1.0
    return b


def is_symplectic(s, tol: float = MEMBERSHIP_TOL) -> bool:
    """True when ``S B S^T = B`` within ``tol`` (B the commutation form)."""
    s = as_mat4(s)
    b = symplectic_form()
    return max_abs(s @ b @ s.T - b) <= tol


def is_orthogonal(s, tol: float = MEMBERSHIP_TOL) -> bool:
    """True when ``S^T S = I`` within ``tol``."""
    s = as_mat4(s)
    return max_abs(s.T @ s - np.eye(4)) <= tol


@dataclass(frozen=True)
class TransformMatrix:
    """A 4x4 real transformation with its group-membership flags."""

    mat: np.ndarray
    is_orthogonal: bool
    is_symplectic: bool


def classify(mat, tol: float = MEMBERSHIP_TOL) -> TransformMatrix:
    """Wrap ``mat`` with membership flags evaluated at tolerance ``tol``."""
    m = as_mat4(mat)
    return TransformMatrix(
        mat=m,
        is_orthogonal=is_orthogonal(m, tol),
        is_symplectic=is_symplectic(m, tol),
    )


def embed_unitary(u, tol: float = UNITARY_TOL) -> TransformMatrix:
    """Embed a U(2) element into its 4x4 quadrature representation.

    With ``U = X - iY`` the embedding is ``[[X, Y], [-Y, X]]``.  Such
    matrices are simultaneously orthogonal and symplectic; conversely every
    orthogonal symplectic 4x4 matrix arises this way, so the image is the
    full passive subgroup.

    Raises
    ------
    NotUnitaryError
        If ``max_abs(U^dag U - I)`` exceeds ``tol``.
    """
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise ValueError(f"expected a 2x2 unitary, got shape {u.shape}")
    defect = max_abs(u.conj().T @ u - np.eye(2))
    if defect > tol:
        raise NotUnitaryError(f"unitarity defect {defect:.3e} exceeds {tol:.3e}")
    x, y = u.real, -u.imag
    s = np.block([[x, y], [-y, x]])
    return classify(s)


def block_rotation(theta: float) -> TransformMatrix:
    """Rotate the position pair by ``theta`` and the momentum pair by the
    transposed (opposite-sense) rotation.

    The result is orthogonal for every angle but canonical only for
    ``theta = 0 mod pi``: rotating positions and momenta with opposite
    senses breaks the commutation form unless the rotation is +-identity.
    """
    c, s = math.cos(theta), math.sin(theta)
    r = np.array([[c, s], [-s, c]])
    m = np.zeros((4, 4))
    m[:2, :2] = r
    m[2:, 2:] = r.T
    return classify(m)


def cross_rotation(phi: float) -> TransformMatrix:
    """Equal-angle rotations in the (q1, p2) and (q2, p1) planes.

    This is the embedding of the unitary ``[[cos phi, -i sin phi],
    [-i sin phi, cos phi]]`` (a symmetric beam-splitter mix), hence
    orthogonal and canonical for every angle.
    """
    c, s = math.cos(phi), math.sin(phi)
    m = np.array(
        [
            [c, 0.0, 0.0, s],
            [0.0, c, s, 0.0],
            [0.0, -s, c, 0.0],
            [-s, 0.0, 0.0, c],
        ]
    )
    return classify(m)


def heterodyne_mix(psi: float) -> tuple[np.ndarray, TransformMatrix]:
    """Equal-weight two-mode mixer with relative phase ``psi``.

    Returns the U(2) element

        ``(1/sqrt 2) [[e^{-i psi/2},  e^{-i psi/2}],
                      [e^{+i psi/2}, -e^{+i psi/2}]]``

    together with its 4x4 embedding.  This one-parameter family is the set
    of passive mixes accessible to a heterodyne measurement of the two
    modes.
    """
    e = complex(math.cos(psi / 2), -math.sin(psi / 2))
    u = np.array([[e, e], [e.conjugate(), -e.conjugate()]]) / math.sqrt(2)
    return u, embed_unitary(u)
