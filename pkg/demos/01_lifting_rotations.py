# %% [markdown]
# # Lifting rotations to SU(2)
#
# Every rotation of the Bloch sphere is induced by exactly two unitaries,
# U and -U. `lift` returns one of them in closed form.

# %%
import numpy as np

from so3lift import adjoint_so3, axis_rotation, lift
from so3lift.oracle import pi_rotation, random_rotation

np.set_printoptions(precision=4, suppress=True)

# %% [markdown]
# Start with a quarter turn about z. The closed form for z rotations is
# diag(exp(-i t/2), exp(i t/2)).

# %%
O, U_expected = axis_rotation("z", np.pi / 2)
res = lift(O)
print(res.representative)
print("branch:", res.branch.value, " residual:", res.residual)
print("matches up to sign:",
      np.allclose(res.representative, U_expected) or np.allclose(res.representative, -U_expected))

# %% [markdown]
# Going back through the adjoint map recovers the rotation.

# %%
O = random_rotation(2024)
U = lift(O).representative
print(np.abs(adjoint_so3(U) - O).max())

# %% [markdown]
# Half turns have trace -1, so the scalar part of the quaternion is zero and
# the vector branch takes over.

# %%
for axis in [(0, 0, 1), (1, 1, 0), (1, -2, 3)]:
    O = pi_rotation(axis)
    r = lift(O)
    print(axis, r.branch.value, np.round(r.quaternion, 4), f"{r.residual:.1e}")
