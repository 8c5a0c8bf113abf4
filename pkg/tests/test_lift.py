import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from so3lift import (
    Branch,
    ConsistencyError,
    InvalidInputError,
    PreconditionError,
    adjoint_so3,
    bell_trace_magnitudes,
    check_orthogonality,
    euler_rodrigues,
    lift,
    lift_real,
    lift_vector,
    sign_table,
    vector_case,
    w_matrix,
)
from so3lift.group import ABS_L1, ABS_L2, ABS_L3
from so3lift.oracle import pi_rotation, random_rotation

from conftest import L_EXAMPLE, R_EXAMPLE, U_LT_EXAMPLE, U_R_EXAMPLE, Z90, up_to_sign

S2 = np.sqrt(2) / 2
PI_111 = np.full((3, 3), 2 / 3) - np.eye(3)  # pi about (1,1,1)/sqrt(3)
PI_110 = np.array([[0.0, 1, 0], [1, 0, 0], [0, 0, -1]])


def test_bell_trace_magnitudes():
    assert bell_trace_magnitudes(np.eye(3)) == (1, 0, 0, 0)
    np.testing.assert_allclose(bell_trace_magnitudes(Z90), [S2, S2, 0, 0], atol=1e-15)
    np.testing.assert_allclose(bell_trace_magnitudes(np.diag([-1.0, -1, 1])), [0, 1, 0, 0], atol=1e-15)


def test_bell_trace_magnitudes_reject_non_rotation():
    with pytest.raises(InvalidInputError):
        bell_trace_magnitudes(np.diag([1.0, 1, -1]))


@given(st.integers(0, 2**63 - 1))
def test_bell_magnitudes_are_normalized(seed):
    m = bell_trace_magnitudes(random_rotation(seed))
    assert sum(x * x for x in m) == pytest.approx(1, abs=1e-9)


def test_sign_table():
    assert sign_table(np.eye(3)) == (0, 0, 0, 0, 0, 0)
    assert sign_table(Z90) == (-1, 0, 0, 0, 0, 0)
    assert sign_table(L_EXAMPLE.T) == (1, 1, 1, 1, 1, 1)


def test_lift_real_examples():
    np.testing.assert_array_equal(lift_real(np.eye(3)), np.eye(2))
    np.testing.assert_allclose(lift_real(L_EXAMPLE.T), U_LT_EXAMPLE, atol=1e-15)
    np.testing.assert_allclose(lift_real(R_EXAMPLE), U_R_EXAMPLE, atol=1e-15)
    with pytest.raises(PreconditionError):
        lift_real(np.diag([-1.0, -1, 1]))


def test_w_matrix_examples():
    # all three sign traces vanish for O = I against |L_i|
    np.testing.assert_array_equal(w_matrix(np.eye(3), ABS_L1, ABS_L2, ABS_L3), np.zeros((2, 2)))
    W = w_matrix(PI_111, ABS_L1, ABS_L2, ABS_L3)
    assert up_to_sign(W, np.array([[1j, 1 + 1j], [-1 + 1j, -1j]]) / np.sqrt(3), 1e-15)
    W = w_matrix(np.diag([-1.0, -1, 1]), np.eye(3), np.eye(3), np.eye(3))
    np.testing.assert_allclose(W, np.diag([-1j, 1j]), atol=1e-15)


def test_lift_vector_examples():
    U = lift_vector(np.diag([-1.0, -1, 1]))
    assert up_to_sign(U, np.diag([1j, -1j]), 1e-15)
    U = lift_vector(PI_110)
    assert up_to_sign(U, np.array([[0, 1 + 1j], [-1 + 1j, 0]]) / np.sqrt(2), 1e-15)
    U = lift_vector(PI_111)
    assert up_to_sign(U, np.array([[1j, 1 + 1j], [-1 + 1j, -1j]]) / np.sqrt(3), 1e-15)
    for O in (np.diag([-1.0, -1, 1]), PI_110, PI_111):
        U = lift_vector(O)
        assert abs(np.trace(U)) < 1e-15
        np.testing.assert_allclose(adjoint_so3(U), O, atol=1e-12)
    with pytest.raises(PreconditionError):
        lift_vector(np.eye(3))


def test_lift_examples():
    res = lift(np.eye(3))
    np.testing.assert_array_equal(res.representative, np.eye(2))
    assert res.branch is Branch.REAL and res.residual == 0
    np.testing.assert_allclose(lift(L_EXAMPLE.T).representative, U_LT_EXAMPLE, atol=1e-15)
    np.testing.assert_allclose(lift(R_EXAMPLE).representative, U_R_EXAMPLE, atol=1e-15)
    res = lift(np.diag([1.0, -1, -1]))
    assert res.branch is Branch.VECTOR
    np.testing.assert_allclose(res.representative, [[0, 1j], [1j, 0]], atol=1e-15)
    np.testing.assert_allclose(res.pair[1], [[0, -1j], [-1j, 0]], atol=1e-15)


def test_lift_rejects_invalid_input():
    with pytest.raises(InvalidInputError):
        lift(np.diag([2.0, 1, 1]))
    with pytest.raises(InvalidInputError):
        lift(np.diag([1.0, 1, -1]))


def test_lift_result_is_read_only():
    res = lift(Z90)
    with pytest.raises(ValueError):
        res.representative[0, 0] = 0


@pytest.mark.parametrize("axis, case", [
    ((1, -2, 3), 1), ((1, 1, 1), 1),
    ((1, 1, 0), 2), ((-2, 1, 0), 2),
    ((1, 0, 1), 3), ((2, 0, -1), 3),
    ((0, 1, 1), 4), ((0, 3, -1), 4),
    ((0, 0, 1), 5), ((0, 1, 0), 6), ((1, 0, 0), 7),
])
def test_all_vector_cases_reachable(axis, case):
    # pi about n = (n_x, n_y, n_z) has quaternion (0, n_z, n_y, n_x)
    O = pi_rotation(axis)
    assert vector_case(O) == case
    res = lift(O)
    assert res.branch is Branch.VECTOR
    assert res.residual < 1e-12
    n = np.asarray(axis, dtype=float) / np.linalg.norm(axis)
    assert up_to_sign(np.array(res.quaternion), np.array([0, n[2], n[1], n[0]]), 1e-12)


@given(st.integers(0, 2**63 - 1))
def test_lift_properties(seed):
    O = random_rotation(seed)
    res = lift(O)
    assert res.residual < 1e-9
    assert (res.branch is Branch.VECTOR) == (abs(1 + np.trace(O)) <= 1e-9)
    for U in res.pair:
        np.testing.assert_allclose(adjoint_so3(U), O, atol=1e-9)
    np.testing.assert_allclose(np.abs(res.quaternion), bell_trace_magnitudes(O), atol=1e-9)
    assert res.quaternion.a1 > 0
    a1, a2, b1, b2 = res.quaternion
    products = [a1 * a2, a1 * b1, a1 * b2, b1 * b2, a2 * b2, a2 * b1]
    for sgn, p in zip(sign_table(O), products):
        if sgn:
            assert np.sign(p) == sgn


def test_ambiguous_band_picks_smaller_residual():
    # scalar part 1e-4: 1 + tr(O) = 4e-8 sits inside (1e-9, 1e-6)
    q = np.array([1e-4, 0.6, 0.0, 0.8])
    q /= np.linalg.norm(q)
    O = euler_rodrigues(q)
    assert 1e-9 < 1 + np.trace(O) < 1e-6
    res = lift(O)
    assert res.branch is Branch.REAL and res.residual < 1e-9


def test_tiny_scalar_part_below_branch_tol_falls_back_to_real():
    q = np.array([1e-5, 0.6, 0.0, 0.8])
    q /= np.linalg.norm(q)
    O = euler_rodrigues(q)
    assert 1 + np.trace(O) <= 1e-9
    res = lift(O)
    assert res.residual < 1e-9


def test_lift_raises_on_inconsistent_sign_pattern():
    # vector components 1e-6, 1e-6, ~1 make b1*b2 fall below eps while the other
    # products do not; no selector fires and the lift cannot recover
    v = np.array([1.0, 1e-6, 1e-6])
    O = pi_rotation(v[::-1])
    assert vector_case(O) == 0
    with pytest.raises(ConsistencyError):
        lift(O, eps=1e-9)


def test_orthogonality_converse(rng):
    # rotations with tr(O1^T O2) = -1 lift to orthogonal unitaries
    for _ in range(200):
        O1 = random_rotation(int(rng.integers(2**62)))
        n = rng.standard_normal(3)
        O2 = O1 @ pi_rotation(n)
        assert np.trace(O1.T @ O2) == pytest.approx(-1, abs=1e-9)
        chk = check_orthogonality(lift(O1).representative, lift(O2).representative)
        assert chk.orthogonal
