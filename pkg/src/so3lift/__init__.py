"""Explicit SO(3) -> SU(2) lifting and local control of two-qubit correlations."""
from .decomp import (
    Diagonalization,
    OneSided,
    QrResult,
    Side,
    SignedSvd,
    diagonalize,
    qr_so3,
    signed_svd,
    symmetrize_one_sided,
    triangularize,
)
from .errors import (
    ConsistencyError,
    InvalidInputError,
    NotAStateError,
    PreconditionError,
    So3LiftError,
)
from .group import (
    Axis,
    UnitQuaternion,
    adjoint_so3,
    as_rotation,
    as_su2,
    axis_rotation,
    check_orthogonality,
    euler_rodrigues,
    quat_from_su2,
    rotate_vector,
    sgn_eps,
    su2_from_quat,
)
from .lift import (
    Branch,
    LiftResult,
    bell_trace_magnitudes,
    lift,
    lift_real,
    lift_vector,
    sign_table,
    vector_case,
    w_matrix,
)
from .oracle import OracleReport, brute_lift, oracle_check, random_rotation, roundtrip_residual
from .state import BlochForm, apply_local, as_density, bell_state, from_bloch, to_bloch, transform_bloch

__version__ = "0.1.0"
