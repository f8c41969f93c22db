import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pairsqueeze import (
    NoConvergenceError,
    NotSymmetricError,
    PairParams,
    analytic_spectrum,
    block_rotation,
    cross_rotation,
    jacobi_angle,
    mat_mul,
    max_abs,
    sym_eigen,
    symplectic_form,
    variance_matrix,
)


def test_mat_mul_identity():
    eye = np.eye(4)
    assert np.array_equal(mat_mul(eye, eye), eye)


def test_mat_mul_form_squares_to_minus_identity():
    b = symplectic_form()
    assert np.array_equal(mat_mul(b, b), -np.eye(4))


def test_mat_mul_matches_hand_expansion():
    # Independent oracle: the 64 multiply-adds written out explicitly.
    rng = np.random.default_rng(1234)
    a = rng.uniform(-3.0, 3.0, (4, 4))
    b = rng.uniform(-3.0, 3.0, (4, 4))
    expected = np.empty((4, 4))
    for i in range(4):
        for j in range(4):
            expected[i, j] = (
                a[i, 0] * b[0, j]
                + a[i, 1] * b[1, j]
                + a[i, 2] * b[2, j]
                + a[i, 3] * b[3, j]
            )
    assert max_abs(mat_mul(a, b) - expected) <= 1e-13


def test_mat_mul_rejects_bad_shape():
    with pytest.raises(ValueError):
        mat_mul(np.eye(3), np.eye(3))
    with pytest.raises(ValueError):
        mat_mul(np.full((4, 4), np.nan), np.eye(4))


def test_jacobi_angle_branch_rules():
    assert jacobi_angle(1.0, 0.0, 0.0) == 0.0
    assert jacobi_angle(0.0, 0.0, 0.0) == 0.0
    assert jacobi_angle(0.0, 0.0, 1.0) == pytest.approx(math.pi / 4, abs=1e-15)
    # boundary fold: the -pi/4 solution maps to +pi/4
    assert jacobi_angle(0.0, 0.0, -1.0) == pytest.approx(math.pi / 4, abs=1e-15)
    assert jacobi_angle(2.0, 0.0, 1.0) == pytest.approx(math.pi / 8, abs=1e-15)


def test_sym_eigen_diagonal_input():
    spec = sym_eigen(np.diag([1.0, 2.0, 3.0, 4.0]))
    assert np.array_equal(spec.values, [1.0, 2.0, 3.0, 4.0])
    assert np.array_equal(spec.vectors, np.eye(4))


def test_sym_eigen_zero_amplitude_variance():
    # Already diagonal, with ties: ordering must keep the original index
    # order (columns e2, e4 then e1, e3).
    v = variance_matrix(PairParams(0.0, 2))
    assert np.array_equal(v, np.diag([2.5, 0.5, 2.5, 0.5]))
    spec = sym_eigen(v)
    assert np.array_equal(spec.values, [0.5, 0.5, 2.5, 2.5])
    assert np.array_equal(spec.vectors, np.eye(4)[:, [1, 3, 0, 2]])


def test_sym_eigen_matches_closed_form_spectrum():
    params = PairParams(1.0, 1)
    lo, hi = analytic_spectrum(params)
    spec = sym_eigen(variance_matrix(params))
    assert np.max(np.abs(spec.values - [lo, lo, hi, hi])) <= 1e-10


def test_sym_eigen_invariants_on_random_matrices():
    rng = np.random.default_rng(7)
    for _ in range(50):
        a = rng.uniform(-5.0, 5.0, (4, 4))
        a = a + a.T
        spec = sym_eigen(a)
        assert max_abs(spec.vectors.T @ spec.vectors - np.eye(4)) <= 1e-12
        rebuilt = spec.vectors @ np.diag(spec.values) @ spec.vectors.T
        assert max_abs(rebuilt - a) <= 1e-10
        assert np.max(np.abs(spec.values - np.linalg.eigvalsh(a))) <= 1e-10
        assert abs(np.trace(a) - np.sum(spec.values)) <= 1e-10
        assert np.all(np.diff(spec.values) >= 0.0)


def test_sym_eigen_is_deterministic():
    rng = np.random.default_rng(11)
    a = rng.uniform(-2.0, 2.0, (4, 4))
    a = a + a.T
    first = sym_eigen(a)
    second = sym_eigen(a)
    assert np.array_equal(first.values, second.values)
    assert np.array_equal(first.vectors, second.vectors)


def test_sym_eigen_rejects_asymmetric_input():
    a = np.eye(4)
    a[0, 1] = 1e-6
    with pytest.raises(NotSymmetricError):
        sym_eigen(a)
    # a loose tolerance admits the same matrix
    sym_eigen(a, tol=1e-3)


def test_sym_eigen_sweep_budget():
    a = np.eye(4)
    a[0, 1] = a[1, 0] = 0.5
    with pytest.raises(NoConvergenceError):
        sym_eigen(a, max_sweeps=0)


@settings(max_examples=60, deadline=None)
@given(
    theta=st.floats(-math.pi, math.pi),
    phi=st.floats(-math.pi, math.pi),
    entries=st.lists(st.floats(-10.0, 10.0), min_size=10, max_size=10),
)
def test_eigenvalues_invariant_under_orthogonal_conjugation(theta, phi, entries):
    a = np.zeros((4, 4))
    a[np.triu_indices(4)] = entries
    a = a + np.triu(a, 1).T
    rot = block_rotation(theta).mat @ cross_rotation(phi).mat
    base = sym_eigen(a).values
    conjugated = sym_eigen(rot @ a @ rot.T).values
    assert np.max(np.abs(base - conjugated)) <= 1e-9
    assert abs(np.trace(a) - np.sum(base)) <= 1e-10
