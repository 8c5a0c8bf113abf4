# %% [markdown]
# # Orthogonal unitaries and their rotations
#
# Two SU(2) elements with tr(U1 U2^+) = 0 induce rotations with
# tr(O1^T O2) = -1. In general tr(O1^T O2) + 1 = |tr(U1 U2^+)|^2.

# %%
import numpy as np

from so3lift import check_orthogonality
from so3lift.oracle import random_su2

U1 = random_su2(1)
# multiply by a traceless element of SU(2)
V = np.array([[1j, 0], [0, -1j]])
chk = check_orthogonality(U1, U1 @ V)
print(chk)

# %%
U2 = random_su2(2)
chk = check_orthogonality(U1, U2)
print(chk.so3_trace + 1, abs(chk.su2_trace) ** 2)
