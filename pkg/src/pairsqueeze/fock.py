"""Truncated Fock-space oracle for pair coherent states.

Ground truth for the closed-form module: the state is expanded over
``|n+q, n>`` up to a truncation depth, the four quadrature operators are
materialized as dense matrices over the full two-mode product basis, and
every moment is evaluated by direct matrix algebra.  Nothing here reuses
the analytic formulas beyond the defining Fock coefficients, so agreement
between the two routes is a real check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, OracleCheckError, SeriesOverflowError, TruncationError
from .pair_coherent import PairParams

#: A state may drop at most this much squared weight at the truncation edge.
TAIL_TOL = 1e-8

#: First moments of a pair coherent state vanish; the oracle enforces it.
_MOMENT_TOL = 1e-10


def default_ncut(params: PairParams) -> int:
    """Truncation depth heuristic: the coefficient peak sits near ``|zeta|``
    and the tail decays factorially beyond, so a margin of a few times
    ``|zeta|`` plus a square-root cushion keeps the dropped weight far below
    any tolerance used in the checks."""
    x = abs(params.zeta)
    return max(20, math.ceil(4.0 * x + 10.0 * math.sqrt(x) + params.q))


@dataclass(frozen=True)
class FockState:
    """Truncated expansion of ``|zeta, q>`` over ``|n+q, n>`` for
    ``n = 0..ncut``.  ``coeffs[n]`` is the complex amplitude of ``|n+q, n>``
    after renormalization over the kept support; ``tail_bound`` is the
    squared magnitude the first dropped coefficient would have carried."""

    coeffs: np.ndarray
    q: int
    ncut: int
    tail_bound: float


def pair_state(
    params: PairParams, ncut: int | None = None, tail_tol: float = TAIL_TOL
) -> FockState:
    """Build the truncated state vector.

    Parameters
    ----------
    params : PairParams
        State labels.
    ncut : int, optional
        Truncation depth (``>= 1``); defaults to :func:`default_ncut`.
    tail_tol : float
        Raise ``TruncationError`` when the dropped squared weight exceeds
        this bound, signalling that ``ncut`` must grow with ``|zeta|``.
    """
    if ncut is None:
        ncut = default_ncut(params)
    if ncut < 1:
        raise DomainError(f"ncut must be >= 1, got {ncut}")
    # Unnormalized amplitudes zeta^n / sqrt(n! (n+q)!) up to the first
    # dropped term; the common q!^(-1/2) prefactor cancels on renormalization.
    amps = np.empty(ncut + 2, dtype=complex)
    amps[0] = 1.0
    for n in range(ncut + 1):
        amps[n + 1] = amps[n] * params.zeta / math.sqrt((n + 1) * (n + 1 + params.q))
        if not np.isfinite(amps[n + 1]):
            raise SeriesOverflowError(
                f"amplitude overflow at n={n + 1} for |zeta| = {abs(params.zeta):.4g}"
            )
    kept = np.abs(amps[: ncut + 1]) ** 2
    norm_sq = float(np.sum(kept))
    tail = float(abs(amps[ncut + 1]) ** 2 / norm_sq)
    if tail > tail_tol:
        raise TruncationError(
            f"tail bound {tail:.3e} exceeds {tail_tol:.1e}; increase ncut"
        )
    return FockState(
        coeffs=amps[: ncut + 1] / math.sqrt(norm_sq),
        q=params.q,
        ncut=ncut,
        tail_bound=tail,
    )


@dataclass(frozen=True)
class QuadOps:
    """Dense quadrature operators ``(q1, q2, p1, p2)`` over the product
    basis with mode dimensions ``dim1 = ncut + q + 1`` and
    ``dim2 = ncut + 1``.  Flat index convention: ``i = m1 * dim2 + m2``."""

    q1: np.ndarray
    q2: np.ndarray
    p1: np.ndarray
    p2: np.ndarray
    dim1: int
    dim2: int

    def operators(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        return self.q1, self.q2, self.p1, self.p2


def quadrature_ops(q: int, ncut: int) -> QuadOps:
    """Materialize the quadratures ``q_j = (a_j + a_j^dag)/sqrt 2`` and
    ``p_j = -i (a_j - a_j^dag)/sqrt 2`` as dense matrices."""
    if q < 0 or ncut < 1:
        raise DomainError("need q >= 0 and ncut >= 1")
    dim1, dim2 = ncut + q + 1, ncut + 1

    def lowering(dim: int) -> np.ndarray:
        return np.diag(np.sqrt(np.arange(1.0, dim)), 1)

    a1 = np.kron(lowering(dim1), np.eye(dim2)).astype(complex)
    a2 = np.kron(np.eye(dim1), lowering(dim2)).astype(complex)
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    return QuadOps(
        q1=(a1 + a1.conj().T) * inv_sqrt2,
        q2=(a2 + a2.conj().T) * inv_sqrt2,
        p1=(a1 - a1.conj().T) * (-1j * inv_sqrt2),
        p2=(a2 - a2.conj().T) * (-1j * inv_sqrt2),
        dim1=dim1,
        dim2=dim2,
    )


def state_vector(state: FockState) -> np.ndarray:
    """Embed the pair expansion into the flat product basis."""
    dim2 = state.ncut + 1
    dim1 = state.ncut + state.q + 1
    psi = np.zeros(dim1 * dim2, dtype=complex)
    for n, c in enumerate(state.coeffs):
        psi[(n + state.q) * dim2 + n] = c
    return psi


def _ops_for(state: FockState, ops: QuadOps | None) -> QuadOps:
    if ops is None:
        return quadrature_ops(state.q, state.ncut)
    if ops.dim1 != state.ncut + state.q + 1 or ops.dim2 != state.ncut + 1:
        raise DomainError("operator dimensions do not match the state")
    return ops


def numeric_first_moments(state: FockState, ops: QuadOps | None = None) -> np.ndarray:
    """Expectation values of ``(q1, q2, p1, p2)``; identically zero for pair
    coherent states since the expansion holds the photon difference fixed."""
    ops = _ops_for(state, ops)
    psi = state_vector(state)
    return np.array([np.vdot(psi, op @ psi).real for op in ops.operators()])


def numeric_variance(state: FockState, ops: QuadOps | None = None) -> np.ndarray:
    """Symmetrized second-moment matrix computed by direct matrix algebra.

    Every entry is ``<{xi_a, xi_b}>/2`` evaluated from the dense operators
    applied to the state vector; both operator orders are formed explicitly.
    First moments are checked to vanish as a self-test of the construction.

    Passing a precomputed ``ops`` (shared across states of equal ``q`` and
    ``ncut``) avoids rebuilding the dense operators.
    """
    ops = _ops_for(state, ops)
    psi = state_vector(state)
    applied = [op @ psi for op in ops.operators()]

    moments = np.array([np.vdot(psi, ap).real for ap in applied])
    worst = float(np.max(np.abs(moments)))
    if worst > _MOMENT_TOL:
        raise OracleCheckError(f"first moment {worst:.3e} exceeds {_MOMENT_TOL:.1e}")

    v = np.empty((4, 4))
    for a in range(4):
        for b in range(a, 4):
            sym = 0.5 * (np.vdot(applied[a], applied[b]) + np.vdot(applied[b], applied[a]))
            v[a, b] = v[b, a] = sym.real
    return v


def numeric_photons(state: FockState) -> tuple[float, float]:
    """Mean occupations by direct summation over the expansion weights."""
    weights = np.abs(state.coeffs) ** 2
    n = np.arange(state.ncut + 1)
    n2 = float(np.sum(n * weights))
    n1 = float(np.sum((n + state.q) * weights))
    return n1, n2
