"""Correlation-matrix engineering with local rotations.

With both qubits accessible, ``T`` can be brought to diagonal form via a
signed SVD ``T = L diag(sigma) R`` whose outer factors are proper rotations.
With one qubit accessible, ``T`` can be made triangular (QR) or symmetric.
Each rotation applied is turned into a local unitary with :func:`lift`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .group import IDENTITY3, SIGN_EPS, _frozen, as_rotation
from .lift import lift
from .state import BlochForm, transform_bloch

QR_RANK_TOL = 1e-12

# pi rotation about x; moves a sign from the third to the second diagonal slot
_FLIP_YZ = np.diag([1.0, -1.0, -1.0])


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class SignedSvd:
    """``T = L @ diag(sigma) @ R`` with ``L, R`` in SO(3).

    ``sigma`` is ordered by decreasing magnitude; only ``sigma[2]`` can be
    negative and it carries the sign of ``det(T)``.
    """

    L: np.ndarray
    sigma: np.ndarray
    R: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return self.L @ np.diag(self.sigma) @ self.R


@dataclass(frozen=True)
class QrResult:
    """``T = Q @ Rtri`` with ``Q`` in SO(3) and ``Rtri`` upper triangular."""

    Q: np.ndarray
    Rtri: np.ndarray


class Diagonalization(NamedTuple):
    UL: np.ndarray
    UR: np.ndarray
    out: BlochForm


class OneSided(NamedTuple):
    U: np.ndarray
    out: BlochForm


def _side(side) -> Side:
    return Side(side.lower()) if isinstance(side, str) else Side(side)


def signed_svd(T) -> SignedSvd:
    T = np.asarray(T, dtype=float)
    if T.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {T.shape}")
    U, s, Vh = np.linalg.svd(T)
    if np.linalg.det(U) < 0:
        U[:, 2] *= -1
        s[2] *= -1
    if np.linalg.det(Vh) < 0:
        Vh[2, :] *= -1
        s[2] *= -1
    return SignedSvd(_frozen(U), _frozen(s), _frozen(Vh))


def diagonalize(bf: BlochForm, svd: SignedSvd | None = None,
                bell_frame: bool = True, eps: float = SIGN_EPS) -> Diagonalization:
    """Local unitaries ``UL x UR`` that make the correlation matrix diagonal.

    ``svd`` overrides the factorization of ``bf.T`` (it must reconstruct it).
    With ``bell_frame`` a negative ``sigma[2]`` is traded for negative
    ``sigma[1]`` and ``sigma[2]`` signs flipped together, so a maximally
    entangled state with ``det(T) < 0`` lands on ``|Phi+>`` rather than
    ``|Psi+>``.
    """
    if svd is None:
        svd = signed_svd(bf.T)
    L, R = as_rotation(svd.L), as_rotation(svd.R)
    if bell_frame and svd.sigma[2] < 0:
        L = L @ _FLIP_YZ
    out = transform_bloch(bf, L.T, R)
    return Diagonalization(lift(L.T, eps).representative, lift(R, eps).representative, out)


def _orthonormal_columns(T, tol):
    Q = np.zeros((3, 3))
    have = [False] * 3
    for k in range(3):
        v = T[:, k].copy()
        # two passes of modified Gram-Schmidt for stability
        for _ in range(2):
            for j in range(k):
                if have[j]:
                    v -= (Q[:, j] @ v) * Q[:, j]
        n = np.linalg.norm(v)
        if n > tol:
            Q[:, k] = v / n
            have[k] = True
    for k in range(3):
        if have[k]:
            continue
        done = [Q[:, j] for j in range(3) if have[j]]
        if len(done) == 2:
            v = np.cross(done[0], done[1])
        else:
            for e in IDENTITY3:
                v = e - sum((q @ e) * q for q in done)
                if np.linalg.norm(v) > 0.5:
                    break
        Q[:, k] = v / np.linalg.norm(v)
        have[k] = True
    return Q


def qr_so3(T) -> QrResult:
    """Gram-Schmidt QR with ``Q`` forced into SO(3).

    Nonzero diagonal entries of ``Rtri`` are positive except the last, which
    absorbs ``det(T)``'s sign. Rank-deficient inputs are completed with cross
    products or, failing that, the first usable coordinate axis.
    """
    T = np.asarray(T, dtype=float)
    if T.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {T.shape}")
    Q = _orthonormal_columns(T, QR_RANK_TOL * max(1.0, np.linalg.norm(T)))
    Rtri = np.triu(Q.T @ T)
    if np.linalg.det(Q) < 0:
        Q[:, 2] *= -1
        Rtri[2, :] *= -1
    return QrResult(_frozen(Q), _frozen(Rtri))


def triangularize(bf: BlochForm, side="left", eps: float = SIGN_EPS) -> OneSided:
    """One local rotation making ``T`` upper (left) or lower (right) triangular."""
    if _side(side) is Side.LEFT:
        M = qr_so3(bf.T).Q.T
        out = transform_bloch(bf, M, IDENTITY3)
    else:
        M = qr_so3(bf.T.T).Q.T
        out = transform_bloch(bf, IDENTITY3, M)
    return OneSided(lift(M, eps).representative, out)


def symmetrize_one_sided(bf: BlochForm, side="left",
                         svd: SignedSvd | None = None, eps: float = SIGN_EPS) -> OneSided:
    """One local rotation making ``T = L S R`` symmetric.

    Left gives ``R^T S R``; right gives ``L S L^T``.
    """
    if svd is None:
        svd = signed_svd(bf.T)
    L, R = as_rotation(svd.L), as_rotation(svd.R)
    if _side(side) is Side.LEFT:
        M = R.T @ L.T
        out = transform_bloch(bf, M, IDENTITY3)
    else:
        M = L @ R
        out = transform_bloch(bf, IDENTITY3, M)
    return OneSided(lift(M, eps).representative, out)
