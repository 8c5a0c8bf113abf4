"""Independent checks on the closed-form lift.

Random draws use ``numpy.random.default_rng(seed)`` (PCG64). Unit quaternions
are normalized standard-normal 4-vectors, which makes them uniform on the
3-sphere and the induced rotations Haar distributed.

:func:`brute_lift` never touches the closed-form formulas: it searches
quaternion space against :func:`euler_rodrigues` alone.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .group import UnitQuaternion, _frozen, adjoint_so3, as_rotation, euler_rodrigues, su2_from_quat
from .lift import lift


@dataclass(frozen=True)
class OracleReport:
    residual_closed_form: float
    residual_brute: float
    quaternion_distance: float
    samples: int


def random_unit_quaternion(rng: np.random.Generator) -> UnitQuaternion:
    q = rng.standard_normal(4)
    return UnitQuaternion(*(q / np.linalg.norm(q)))


def random_rotation(seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return euler_rodrigues(random_unit_quaternion(rng))


def random_su2(seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return su2_from_quat(random_unit_quaternion(rng))


def random_density(seed: int, n_pure: int = 4) -> np.ndarray:
    """Dirichlet-weighted mixture of ``n_pure`` Gaussian random pure states."""
    rng = np.random.default_rng(seed)
    psi = rng.standard_normal((n_pure, 4)) + 1j * rng.standard_normal((n_pure, 4))
    psi /= np.linalg.norm(psi, axis=1, keepdims=True)
    w = rng.dirichlet(np.ones(n_pure))
    rho = np.einsum("k,ka,kb->ab", w, psi, psi.conj())
    return _frozen(0.5 * (rho + rho.conj().T))


def pi_rotation(axis) -> np.ndarray:
    """``2 n n^T - I`` for the unit vector along ``axis``."""
    n = np.asarray(axis, dtype=float)
    n = n / np.linalg.norm(n)
    return _frozen(2.0 * np.outer(n, n) - np.eye(3))


def roundtrip_residual(O) -> float:
    O = as_rotation(O)
    return float(np.linalg.norm(adjoint_so3(lift(O).representative) - O))


def _er_batch(q):
    a1, a2, b1, b2 = q.T
    out = np.empty((len(q), 3, 3))
    out[:, 0, 0] = a1**2 - a2**2 - b1**2 + b2**2
    out[:, 1, 1] = a1**2 - a2**2 + b1**2 - b2**2
    out[:, 2, 2] = a1**2 + a2**2 - b1**2 - b2**2
    out[:, 0, 1] = 2 * (a1 * a2 + b1 * b2)
    out[:, 1, 0] = 2 * (-a1 * a2 + b1 * b2)
    out[:, 0, 2] = 2 * (-a1 * b1 + a2 * b2)
    out[:, 2, 0] = 2 * (a1 * b1 + a2 * b2)
    out[:, 1, 2] = 2 * (a2 * b1 + a1 * b2)
    out[:, 2, 1] = 2 * (a2 * b1 - a1 * b2)
    return out


def brute_lift(O, n_samples: int = 50_000, n_refine: int = 200,
               seed: int = 0) -> tuple[UnitQuaternion, float]:
    """Derivative-free search for ``q`` minimizing ``|R(q) - O|_F``.

    Samples ``n_samples`` random unit quaternions, keeps the best, then runs
    ``n_refine`` rounds of coordinate perturbation. The step starts at 0.1
    and halves after every round without improvement.
    """
    if n_samples < 1000:
        raise ValueError("n_samples must be at least 1000")
    O = as_rotation(O)
    # separate stream so the search never replays random_rotation(seed)
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(1,)))
    q = rng.standard_normal((n_samples, 4))
    q /= np.linalg.norm(q, axis=1, keepdims=True)
    # chunked so memory stays flat for large n_samples
    best_res, best = np.inf, None
    for start in range(0, n_samples, 10_000):
        chunk = q[start:start + 10_000]
        res = np.linalg.norm(_er_batch(chunk) - O, axis=(1, 2))
        k = int(np.argmin(res))
        if res[k] < best_res:
            best_res, best = float(res[k]), chunk[k].copy()

    def residual(p):
        return float(np.linalg.norm(euler_rodrigues(p) - O))

    step = 0.1
    for _ in range(n_refine):
        improved = False
        for i in range(4):
            for sign in (1.0, -1.0):
                p = best.copy()
                p[i] += sign * step
                p /= np.linalg.norm(p)
                r = residual(p)
                if r < best_res:
                    best, best_res, improved = p, r, True
        if not improved:
            step *= 0.5
    return UnitQuaternion(*best), best_res


def quaternion_distance(p, q) -> float:
    """Euclidean distance between ``p`` and the nearer of ``q``, ``-q``."""
    p, q = np.asarray(p, dtype=float), np.asarray(q, dtype=float)
    return float(min(np.linalg.norm(p - q), np.linalg.norm(p + q)))


def oracle_check(O, n_samples: int = 50_000, n_refine: int = 200,
                 seed: int = 0) -> OracleReport:
    O = as_rotation(O)
    closed = lift(O)
    q_brute, res_brute = brute_lift(O, n_samples, n_refine, seed)
    return OracleReport(
        residual_closed_form=roundtrip_residual(O),
        residual_brute=res_brute,
        quaternion_distance=quaternion_distance(q_brute, closed.quaternion),
        samples=n_samples,
    )
