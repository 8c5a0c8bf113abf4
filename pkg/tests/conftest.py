import numpy as np
import pytest

# Worked example: initial state, its factorization L @ diag(S) @ R, and the
# unitaries inducing L^T and R.
RHO_EXAMPLE = 0.25 * np.array([
    [1, -1, 1j, 1j],
    [-1, 1, -1j, -1j],
    [-1j, 1j, 1, 1],
    [-1j, 1j, 1, 1],
])
L_EXAMPLE = np.array([[0.0, 0, 1], [1, 0, 0], [0, 1, 0]])
SIGMA_EXAMPLE = np.array([1.0, -1.0, 1.0])
R_EXAMPLE = np.array([[0.0, 0, -1], [1, 0, 0], [0, -1, 0]])
U_LT_EXAMPLE = 0.5 * np.array([[1 + 1j, 1 + 1j], [-1 + 1j, 1 - 1j]])
U_R_EXAMPLE = 0.5 * np.array([[1 - 1j, 1 + 1j], [-1 + 1j, 1 + 1j]])
T_EXAMPLE = np.array([[0.0, -1, 0], [0, 0, -1], [-1, 0, 0]])

Z90 = np.array([[0.0, -1, 0], [1, 0, 0], [0, 0, 1]])


def up_to_sign(A, B, atol):
    """True when A = B or A = -B entrywise within atol."""
    return np.allclose(A, B, rtol=0, atol=atol) or np.allclose(A, -B, rtol=0, atol=atol)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


_ACCEPTANCE = []


def record_criterion(name, passed, detail=""):
    _ACCEPTANCE.append((name, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
