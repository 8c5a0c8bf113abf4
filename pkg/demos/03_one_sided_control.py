# %% [markdown]
# # Working with only one qubit
#
# A single local rotation cannot diagonalize T in general, but it can make T
# triangular (via QR) or symmetric (via the signed SVD).

# %%
import numpy as np

from so3lift import apply_local, to_bloch, symmetrize_one_sided, triangularize
from so3lift.oracle import random_density

np.set_printoptions(precision=4, suppress=True)

rho = random_density(7)
bf = to_bloch(rho)
print(bf.T)

# %%
U, out = triangularize(bf, "left")
print("upper triangular:\n", out.T)
U, out = triangularize(bf, "right")
print("lower triangular:\n", out.T)

# %%
U, out = symmetrize_one_sided(bf, "left")
print("symmetric:\n", out.T)

# %% [markdown]
# The unitary acts on the first qubit only. The second Bloch vector is
# untouched and the singular values of T survive.

# %%
after = to_bloch(apply_local(rho, U, np.eye(2)))
print(np.allclose(after.T, out.T), np.allclose(after.b, bf.b))
print(np.linalg.svd(bf.T, compute_uv=False), np.linalg.svd(out.T, compute_uv=False))
