"""Closed-form SO(3) -> SU(2) lift.

Every rotation ``O`` has exactly two preimages ``{U, -U}`` under the adjoint
map. The magnitudes of the four quaternion components come from traces of
``O`` against the Bell correlation matrices; their relative signs come from
traces against the so(3) basis ``L_i`` and its entrywise absolute values.

Rotations by angle pi (``tr O = -1``) have a vanishing scalar part, so the
relative-sign traces against ``L_i`` all vanish and a separate vector branch
is needed. That branch distinguishes seven cases by which components are
zero; see :func:`vector_case`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, InvalidInputError, PreconditionError
from .group import (
    ABS_L1,
    ABS_L2,
    ABS_L3,
    IDENTITY3,
    L1,
    L2,
    L3,
    PAULI,
    SIGN_EPS,
    T_PHI_MINUS,
    T_PHI_PLUS,
    T_PSI_MINUS,
    T_PSI_PLUS,
    UnitQuaternion,
    _frozen,
    as_rotation,
    sgn_eps,
)

#: ``1 + tr(O)`` at or below this value selects the vector branch.
BRANCH_TOL = 1e-9
#: Upper edge of the band in which both branches are tried.
AMBIGUOUS_BAND = 1e-6
#: Radicands ``1 - tr(O T)`` below ``-RADICAND_TOL`` are rejected.
RADICAND_TOL = 1e-8
#: Target accuracy of the lift.
RESIDUAL_TOL = 1e-9
#: Residual above which the lift is declared broken.
RESIDUAL_FAIL = 1e-6


class Branch(enum.Enum):
    REAL = "real"
    VECTOR = "vector"


@dataclass(frozen=True)
class LiftResult:
    """Canonical member of the preimage pair ``{U, -U}`` of a rotation.

    ``-representative`` induces the same rotation and is an equally valid
    answer; the canonical choice has a positive scalar part, or, for pi
    rotations, a positive first nonzero vector component.
    """

    representative: np.ndarray
    branch: Branch
    quaternion: UnitQuaternion
    residual: float

    @property
    def pair(self) -> tuple[np.ndarray, np.ndarray]:
        return self.representative, _frozen(-self.representative)


def _tr(A, B) -> float:
    return float(np.einsum("ij,ji->", A, B))


def _half_root(O, T) -> float:
    r = 1.0 - _tr(O, T)
    if r < -RADICAND_TOL:
        raise InvalidInputError(
            f"negative radicand 1 - tr(O T) = {r:.3e}; matrix is not special orthogonal")
    return 0.5 * float(np.sqrt(min(max(r, 0.0), 4.0)))


def bell_trace_magnitudes(O) -> tuple[float, float, float, float]:
    """Absolute values ``(|a1|, |a2|, |b1|, |b2|)`` of the preimage quaternion."""
    O = as_rotation(O)
    return (_half_root(O, T_PSI_MINUS), _half_root(O, T_PSI_PLUS),
            _half_root(O, T_PHI_PLUS), _half_root(O, T_PHI_MINUS))


def sign_table(O, eps: float = SIGN_EPS) -> tuple[int, int, int, int, int, int]:
    """Signs of ``a1 a2, a1 b1, a1 b2, b1 b2, a2 b2, a2 b1``, read off from ``O``."""
    O = as_rotation(O)
    return tuple(sgn_eps(_tr(O, M), eps) for M in (L1, L2, L3, ABS_L1, ABS_L2, ABS_L3))


def _assemble(a1, a2, b1, b2) -> np.ndarray:
    return np.array([[a1 + 1j * a2, b1 + 1j * b2], [-b1 + 1j * b2, a1 - 1j * a2]])


def _lift_real(O, eps):
    a1 = _half_root(O, T_PSI_MINUS)
    a2 = sgn_eps(_tr(O, L1), eps) * _half_root(O, T_PSI_PLUS)
    b1 = sgn_eps(_tr(O, L2), eps) * _half_root(O, T_PHI_PLUS)
    b2 = sgn_eps(_tr(O, L3), eps) * _half_root(O, T_PHI_MINUS)
    return _assemble(a1, a2, b1, b2)


def lift_real(O, eps: float = SIGN_EPS) -> np.ndarray:
    """Preimage with positive scalar part; requires ``tr(O) != -1``."""
    O = as_rotation(O)
    if 1.0 + np.trace(O) <= BRANCH_TOL:
        raise PreconditionError("tr(O) = -1: scalar part vanishes, use lift_vector")
    return _frozen(_lift_real(O, eps))


def w_matrix(O, X, Y, Z, eps: float = SIGN_EPS) -> np.ndarray:
    """Traceless 2x2 matrix with component signs taken from ``tr(O X)``, ``tr(O Y)``, ``tr(O Z)``."""
    O = as_rotation(O)
    a2 = sgn_eps(_tr(O, X), eps) * _half_root(O, T_PSI_PLUS)
    b1 = sgn_eps(_tr(O, Y), eps) * _half_root(O, T_PHI_PLUS)
    b2 = sgn_eps(_tr(O, Z), eps) * _half_root(O, T_PHI_MINUS)
    return _frozen(_assemble(0.0, a2, b1, b2))


def _gammas(O, eps):
    return tuple(1 - sgn_eps(_tr(O, M), eps) ** 2 for M in (ABS_L1, ABS_L2, ABS_L3))


def _vector_case(O, eps):
    s = [sgn_eps(_tr(O, M), eps) != 0 for M in (ABS_L1, ABS_L2, ABS_L3)]
    if all(s):
        return 1
    if s == [True, False, False]:
        return 2
    if s == [False, True, False]:
        return 3
    if s == [False, False, True]:
        return 4
    if not any(s):
        mags = [_half_root(O, T) for T in (T_PSI_PLUS, T_PHI_PLUS, T_PHI_MINUS)]
        return 5 + int(np.argmax(mags))
    return 0


# components (a2, b1, b2) known to vanish in each case
_ZERO_PATTERN = {
    1: (False, False, False),
    2: (True, False, False),
    3: (False, True, False),
    4: (False, False, True),
    5: (False, True, True),
    6: (True, False, True),
    7: (True, True, False),
}


def _lift_vector(O, eps):
    g1, g2, g3 = _gammas(O, eps)
    I = IDENTITY3
    U = w_matrix(O, ABS_L1, ABS_L2, ABS_L3, eps)
    # at most one of the selectors below is 1
    if (1 - g1) * g2 * g3:
        U = U + w_matrix(O, I, I, -ABS_L1, eps)
    if g1 * (1 - g2) * g3:
        U = U + w_matrix(O, -ABS_L2, I, I, eps)
    if g1 * g2 * (1 - g3):
        U = U + w_matrix(O, I, -ABS_L3, I, eps)
    if g1 * g2 * g3:
        U = U + w_matrix(O, -I, -I, -I, eps)
    # A component the case declares zero still picks up sqrt(rounding) ~ 1e-8
    # from its radicand; pin it to exactly zero.
    za2, zb1, zb2 = _ZERO_PATTERN.get(_vector_case(O, eps), (False, False, False))
    a2 = 0.0 if za2 else U[0, 0].imag
    b1 = 0.0 if zb1 else U[0, 1].real
    b2 = 0.0 if zb2 else U[0, 1].imag
    return _assemble(0.0, a2, b1, b2)


def lift_vector(O, eps: float = SIGN_EPS) -> np.ndarray:
    """Traceless preimage of a rotation by pi (``tr(O) = -1``)."""
    O = as_rotation(O)
    if abs(1.0 + np.trace(O)) > BRANCH_TOL:
        raise PreconditionError("tr(O) != -1: scalar part is nonzero, use lift_real")
    return _frozen(_lift_vector(O, eps))


def vector_case(O, eps: float = SIGN_EPS) -> int:
    """Which zero pattern of ``(a2, b1, b2)`` a pi rotation falls in.

    1: all nonzero; 2: only ``a2`` zero; 3: only ``b1`` zero; 4: only ``b2``
    zero; 5, 6, 7: only ``a2``, ``b1``, ``b2`` nonzero respectively. Returns 0
    when the sign traces are mutually inconsistent at this ``eps``.
    """
    return _vector_case(as_rotation(O), eps)


def _adjoint_unchecked(U) -> np.ndarray:
    return (0.5 * np.einsum("iab,bc,jcd,da->ij", PAULI, U, PAULI, U.conj().T)).real


def _canonical(U, eps):
    q = (U[0, 0].real, U[0, 0].imag, U[0, 1].real, U[0, 1].imag)
    if abs(q[0]) > eps:
        lead = q[0]
    else:
        lead = next((x for x in q[1:] if abs(x) > eps), 1.0)
    return -U if lead < 0 else U


def lift(O, eps: float = SIGN_EPS) -> LiftResult:
    """Lift a rotation to SU(2), returning the canonical member of ``{U, -U}``."""
    O = as_rotation(O)
    shift = 1.0 + float(np.trace(O))
    candidates = []
    if shift <= BRANCH_TOL:
        U = _lift_vector(O, eps)
        candidates.append((np.linalg.norm(_adjoint_unchecked(U) - O), Branch.VECTOR, U))
    if shift > BRANCH_TOL or candidates[0][0] > RESIDUAL_TOL:
        U = _lift_real(O, eps)
        candidates.append((np.linalg.norm(_adjoint_unchecked(U) - O), Branch.REAL, U))
    if BRANCH_TOL < shift < AMBIGUOUS_BAND:
        U = _lift_vector(O, eps)
        candidates.append((np.linalg.norm(_adjoint_unchecked(U) - O), Branch.VECTOR, U))
    residual, branch, U = min(candidates, key=lambda c: c[0])
    if residual > RESIDUAL_FAIL:
        raise ConsistencyError(f"lift residual {residual:.3e} exceeds {RESIDUAL_FAIL:g}")
    U = _frozen(_canonical(U, eps))
    q = UnitQuaternion(U[0, 0].real, U[0, 0].imag, U[0, 1].real, U[0, 1].imag)
    return LiftResult(U, branch, q, float(residual))
