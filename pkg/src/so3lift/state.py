"""Two-qubit states in density-matrix and Bloch form.

Basis order is ``|00>, |01>, |10>, |11>`` with Pauli matrices
``sigma_1 = X, sigma_2 = Y, sigma_3 = Z``. The Bloch form of ``rho`` is::

    a_i = tr(sigma_i x I rho),  b_j = tr(I x sigma_j rho),
    T_ij = tr(sigma_i x sigma_j rho)
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError, NotAStateError
from .group import PAULI, _frozen, as_rotation, as_su2

STATE_TOL = 1e-10
PSD_TOL = 1e-9

_I2 = np.eye(2, dtype=complex)
_SIGMA_A = np.array([np.kron(s, _I2) for s in PAULI])
_SIGMA_B = np.array([np.kron(_I2, s) for s in PAULI])
_SIGMA_AB = np.array([[np.kron(s, t) for t in PAULI] for s in PAULI])

BELL_VECTORS = {
    "phi+": np.array([1, 0, 0, 1]) / np.sqrt(2),
    "phi-": np.array([1, 0, 0, -1]) / np.sqrt(2),
    "psi+": np.array([0, 1, 1, 0]) / np.sqrt(2),
    "psi-": np.array([0, 1, -1, 0]) / np.sqrt(2),
}


@dataclass(frozen=True)
class BlochForm:
    """Local Bloch vectors ``a``, ``b`` and correlation matrix ``T``."""

    a: np.ndarray
    b: np.ndarray
    T: np.ndarray

    def __post_init__(self):
        for name, shape in (("a", (3,)), ("b", (3,)), ("T", (3, 3))):
            v = np.asarray(getattr(self, name), dtype=float)
            if v.shape != shape:
                raise InvalidInputError(f"{name} must have shape {shape}, got {v.shape}")
            if not np.all(np.isfinite(v)):
                raise InvalidInputError(f"{name} has non-finite entries")
            object.__setattr__(self, name, _frozen(v))

    @classmethod
    def from_correlation(cls, T) -> "BlochForm":
        return cls(np.zeros(3), np.zeros(3), T)

    def allclose(self, other: "BlochForm", atol: float = 1e-10) -> bool:
        return (np.allclose(self.a, other.a, rtol=0, atol=atol)
                and np.allclose(self.b, other.b, rtol=0, atol=atol)
                and np.allclose(self.T, other.T, rtol=0, atol=atol))


def bell_state(name: str) -> np.ndarray:
    """Projector onto one of ``phi+``, ``phi-``, ``psi+``, ``psi-``."""
    v = BELL_VECTORS[name.lower()]
    return _frozen(np.outer(v, v.conj()).astype(complex))


def as_density(rho, tol: float = STATE_TOL, psd_tol: float = PSD_TOL) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise InvalidInputError(f"expected a 4x4 density matrix, got shape {rho.shape}")
    if not np.all(np.isfinite(rho)):
        raise InvalidInputError("density matrix has non-finite entries")
    herm = np.abs(rho - rho.conj().T).max()
    if herm > tol:
        raise InvalidInputError(f"density matrix is not Hermitian (deviation {herm:.3e})")
    tr = np.trace(rho).real
    if abs(tr - 1) > tol:
        raise InvalidInputError(f"density matrix trace is {tr:.12g}, expected 1")
    lam = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))[0]
    if lam < -psd_tol:
        raise NotAStateError(f"density matrix has negative eigenvalue {lam:.3e}")
    return _frozen(rho)


def _real_traces(ops, rho, what):
    vals = np.einsum("...ab,ba->...", ops, rho)
    residue = np.abs(vals.imag).max()
    if residue > STATE_TOL:
        raise InvalidInputError(f"{what} has imaginary residue {residue:.3e}")
    return vals.real


def to_bloch(rho) -> BlochForm:
    rho = as_density(rho)
    return BlochForm(_real_traces(_SIGMA_A, rho, "a"),
                     _real_traces(_SIGMA_B, rho, "b"),
                     _real_traces(_SIGMA_AB, rho, "T"))


def from_bloch(bf: BlochForm, psd_tol: float = PSD_TOL) -> np.ndarray:
    """Assemble ``(I x I + a.s x I + I x b.s + sum T_ij s_i x s_j) / 4``.

    Raises :class:`NotAStateError` if the result is not positive semidefinite.
    """
    rho = 0.25 * (np.eye(4)
                  + np.einsum("i,iab->ab", bf.a, _SIGMA_A)
                  + np.einsum("j,jab->ab", bf.b, _SIGMA_B)
                  + np.einsum("ij,ijab->ab", bf.T, _SIGMA_AB))
    lam = np.linalg.eigvalsh(rho)[0]
    if lam < -psd_tol:
        raise NotAStateError(f"Bloch form does not describe a state (eigenvalue {lam:.3e})")
    return _frozen(rho)


def apply_local(rho, UL, UR) -> np.ndarray:
    """``(UL x UR) rho (UL x UR)^+``."""
    rho = as_density(rho)
    K = np.kron(as_su2(UL), as_su2(UR))
    return _frozen(K @ rho @ K.conj().T)


def transform_bloch(bf: BlochForm, L, R) -> BlochForm:
    """Local rotations ``a -> L a``, ``b -> R b``, ``T -> L T R^T``."""
    L, R = as_rotation(L), as_rotation(R)
    return BlochForm(L @ bf.a, R @ bf.b, L @ bf.T @ R.T)
