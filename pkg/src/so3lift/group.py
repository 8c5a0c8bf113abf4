"""Quaternions, SU(2), and the adjoint map onto SO(3).

Matrices are plain numpy arrays: 2x2 complex for special unitaries, 3x3 real
for rotations. Every array returned from this module is read-only.

The quaternion ``(a1, a2, b1, b2)`` is laid out as::

    U = [[ a1 + i a2,  b1 + i b2],
         [-b1 + i b2,  a1 - i a2]]

so ``a2`` generates rotations about z, ``b1`` about y and ``b2`` about x.
"""
from __future__ import annotations

import enum
from typing import NamedTuple

import numpy as np

from .errors import ConsistencyError, InvalidInputError

#: Zero threshold used by every sign decision.
SIGN_EPS = 1e-9
#: Tolerance on the quaternion norm and on the SU(2) invariants.
UNITARY_TOL = 1e-10
#: Tolerance on the SO(3) invariants of input rotations.
ROTATION_TOL = 1e-8
#: Largest imaginary part tolerated in the adjoint traces.
ADJOINT_IMAG_TOL = 1e-9


def _frozen(a):
    a = np.array(a)
    a.setflags(write=False)
    return a


PAULI = _frozen(np.array([
    [[0, 1], [1, 0]],
    [[0, -1j], [1j, 0]],
    [[1, 0], [0, -1]],
], dtype=complex))

# so(3) basis
L1 = _frozen([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
L2 = _frozen([[0.0, 0.0, 1.0], [0.0, 0.0, 0.0], [-1.0, 0.0, 0.0]])
L3 = _frozen([[0.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, 1.0, 0.0]])
ABS_L1 = _frozen(np.abs(L1))
ABS_L2 = _frozen(np.abs(L2))
ABS_L3 = _frozen(np.abs(L3))

# correlation matrices of the four Bell states
T_PHI_PLUS = _frozen(np.diag([1.0, -1.0, 1.0]))
T_PHI_MINUS = _frozen(np.diag([-1.0, 1.0, 1.0]))
T_PSI_PLUS = _frozen(np.diag([1.0, 1.0, -1.0]))
T_PSI_MINUS = _frozen(np.diag([-1.0, -1.0, -1.0]))

IDENTITY2 = _frozen(np.eye(2, dtype=complex))
IDENTITY3 = _frozen(np.eye(3))


class UnitQuaternion(NamedTuple):
    """Scalar part ``a1`` and vector part ``(a2, b1, b2)`` of a unit quaternion."""

    a1: float
    a2: float
    b1: float
    b2: float

    @property
    def norm(self) -> float:
        return float(np.sqrt(self.a1**2 + self.a2**2 + self.b1**2 + self.b2**2))

    def __neg__(self) -> "UnitQuaternion":
        return UnitQuaternion(-self.a1, -self.a2, -self.b1, -self.b2)


class Axis(enum.Enum):
    X = "x"
    Y = "y"
    Z = "z"


def as_su2(U, tol: float = UNITARY_TOL) -> np.ndarray:
    """Validate a 2x2 special unitary and return a read-only complex copy."""
    U = np.asarray(U, dtype=complex)
    if U.shape != (2, 2):
        raise InvalidInputError(f"expected a 2x2 matrix, got shape {U.shape}")
    if not np.all(np.isfinite(U)):
        raise InvalidInputError("unitary has non-finite entries")
    dev = np.linalg.norm(U @ U.conj().T - np.eye(2))
    if dev > tol:
        raise InvalidInputError(f"unitarity violated: |U U^+ - I|_F = {dev:.3e}")
    det = U[0, 0] * U[1, 1] - U[0, 1] * U[1, 0]
    if abs(det - 1) > tol:
        raise InvalidInputError(f"determinant violated: det(U) = {det:.6g}")
    return _frozen(U)


def as_rotation(O, tol: float = ROTATION_TOL) -> np.ndarray:
    """Validate a 3x3 special orthogonal matrix and return a read-only copy."""
    O = np.asarray(O)
    if O.shape != (3, 3):
        raise InvalidInputError(f"expected a 3x3 matrix, got shape {O.shape}")
    if np.iscomplexobj(O):
        if np.abs(O.imag).max() > tol:
            raise InvalidInputError("rotation has complex entries")
        O = O.real
    O = O.astype(float)
    if not np.all(np.isfinite(O)):
        raise InvalidInputError("rotation has non-finite entries")
    dev = np.linalg.norm(O.T @ O - np.eye(3))
    if dev > tol:
        raise InvalidInputError(f"orthogonality violated: |O^T O - I|_F = {dev:.3e}")
    det = np.linalg.det(O)
    if abs(det - 1) > tol:
        raise InvalidInputError(f"determinant violated: det(O) = {det:.6g}")
    return _frozen(O)


def su2_from_quat(q) -> np.ndarray:
    a1, a2, b1, b2 = (float(x) for x in q)
    n2 = a1 * a1 + a2 * a2 + b1 * b1 + b2 * b2
    if abs(n2 - 1) > UNITARY_TOL:
        raise InvalidInputError(f"quaternion is not unit norm (|q|^2 = {n2:.12g})")
    return _frozen([[a1 + 1j * a2, b1 + 1j * b2], [-b1 + 1j * b2, a1 - 1j * a2]])


def quat_from_su2(U) -> UnitQuaternion:
    U = as_su2(U)
    return UnitQuaternion(U[0, 0].real, U[0, 0].imag, U[0, 1].real, U[0, 1].imag)


def adjoint_so3(U) -> np.ndarray:
    """Rotation induced by conjugation, ``O_ij = tr(s_i U s_j U^+) / 2``.

    ``U`` and ``-U`` give the same rotation.
    """
    U = as_su2(U)
    O = 0.5 * np.einsum("iab,bc,jcd,da->ij", PAULI, U, PAULI, U.conj().T)
    residue = np.abs(O.imag).max()
    if residue > ADJOINT_IMAG_TOL:
        raise ConsistencyError(f"adjoint traces not real (residue {residue:.3e})")
    return _frozen(O.real)


def euler_rodrigues(q) -> np.ndarray:
    """Rotation matrix of a unit quaternion, written out entry by entry."""
    a1, a2, b1, b2 = (float(x) for x in q)
    n2 = a1 * a1 + a2 * a2 + b1 * b1 + b2 * b2
    if abs(n2 - 1) > UNITARY_TOL:
        raise InvalidInputError(f"quaternion is not unit norm (|q|^2 = {n2:.12g})")
    # chi_ij = alpha_i beta_j, mu_12 = alpha_1 alpha_2, nu_12 = beta_1 beta_2
    chi11, chi12, chi21, chi22 = a1 * b1, a1 * b2, a2 * b1, a2 * b2
    mu12, nu12 = a1 * a2, b1 * b2
    tau1 = a1 * a1 - a2 * a2 - b1 * b1 + b2 * b2
    tau2 = a1 * a1 - a2 * a2 + b1 * b1 - b2 * b2
    tau3 = a1 * a1 + a2 * a2 - b1 * b1 - b2 * b2
    return _frozen([
        [tau1, 2 * (mu12 + nu12), 2 * (-chi11 + chi22)],
        [2 * (-mu12 + nu12), tau2, 2 * (chi21 + chi12)],
        [2 * (chi11 + chi22), 2 * (chi21 - chi12), tau3],
    ])


def sgn_eps(t: float, eps: float = SIGN_EPS) -> int:
    """Sign of ``t`` with everything in ``[-eps, eps]`` mapped to 0."""
    if eps < 0:
        raise ValueError("eps must be non-negative")
    if abs(t) <= eps:
        return 0
    return 1 if t > 0 else -1


def axis_rotation(axis, theta: float) -> tuple[np.ndarray, np.ndarray]:
    """Rotation by ``theta`` about a coordinate axis and its (+) SU(2) preimage."""
    axis = Axis(axis.lower()) if isinstance(axis, str) else Axis(axis)
    c, s = np.cos(theta), np.sin(theta)
    ch, sh = np.cos(theta / 2), np.sin(theta / 2)
    if axis is Axis.X:
        O = [[1, 0, 0], [0, c, -s], [0, s, c]]
        U = [[ch, -1j * sh], [-1j * sh, ch]]
    elif axis is Axis.Y:
        O = [[c, 0, s], [0, 1, 0], [-s, 0, c]]
        U = [[ch, -sh], [sh, ch]]
    else:
        O = [[c, -s, 0], [s, c, 0], [0, 0, 1]]
        U = [[np.exp(-0.5j * theta), 0], [0, np.exp(0.5j * theta)]]
    return _frozen(np.array(O, dtype=float)), _frozen(np.array(U, dtype=complex))


def rotate_vector(O, w) -> np.ndarray:
    w = np.asarray(w, dtype=float)
    if w.shape != (3,):
        raise InvalidInputError(f"expected a 3-vector, got shape {w.shape}")
    return _frozen(as_rotation(O) @ w)


class OrthogonalityCheck(NamedTuple):
    su2_trace: complex
    so3_trace: float
    orthogonal: bool


def check_orthogonality(U1, U2, tol: float = SIGN_EPS) -> OrthogonalityCheck:
    """Compare ``tr(U1 U2^+)`` with ``tr(O1^T O2)`` for the induced rotations.

    The unitaries are orthogonal when the first trace vanishes, in which case
    the second equals -1.
    """
    U1, U2 = as_su2(U1), as_su2(U2)
    su2_trace = complex(np.trace(U1 @ U2.conj().T))
    so3_trace = float(np.trace(adjoint_so3(U1).T @ adjoint_so3(U2)))
    return OrthogonalityCheck(su2_trace, so3_trace, abs(su2_trace) <= tol)
