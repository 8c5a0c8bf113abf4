# %% [markdown]
# # Diagonalizing a two-qubit correlation matrix
#
# A state with zero local Bloch vectors and correlation matrix T. A signed
# SVD T = L S R with L, R proper rotations tells us which local rotations to
# apply. Lifting them gives the local unitaries.

# %%
import numpy as np

from so3lift import apply_local, bell_state, diagonalize, signed_svd, to_bloch

np.set_printoptions(precision=4, suppress=True)

rho = 0.25 * np.array([
    [1, -1, 1j, 1j],
    [-1, 1, -1j, -1j],
    [-1j, 1j, 1, 1],
    [-1j, 1j, 1, 1],
])
bf = to_bloch(rho)
print("a =", bf.a, " b =", bf.b)
print(bf.T)

# %%
svd = signed_svd(bf.T)
print("sigma =", svd.sigma)

# %% [markdown]
# `diagonalize` rotates the sign of det(T) into the middle slot, so this
# state ends up on Phi+.

# %%
UL, UR, out = diagonalize(bf)
print(out.T)
rho_out = apply_local(rho, UL, UR)
print("distance to Phi+:", np.linalg.norm(rho_out - bell_state("phi+")))
