# %% [markdown]
# # Logical qudits in a single large spin
#
# A logical qudit of dimension d is spread over mirror-symmetric pairs of
# S_Z levels. The amplitudes are square roots of rationals, so they are
# stored exactly.

# %%
from spinqudit import build_multiqudit_code, build_xyz_code, build_z_code
from spinqudit.codes import dumps_code, format_code

qutrit = build_z_code(3, 1)
print(format_code(qutrit))

# %% [markdown]
# Correcting two dephasing events needs a larger spin (19/2 for a qutrit).

# %%
print(format_code(build_z_code(3, 2)))

# %% [markdown]
# Guarding against S_X and S_Y as well stretches the same pattern by 2t+1,
# so each level sits far from every other occupied level.

# %%
xyz = build_xyz_code(3, 1)
print(xyz.spin.spin, xyz.spin.dimension, xyz.min_level_gap())

# %% [markdown]
# Three spins carrying the same pattern in lockstep give a multi-spin code.

# %%
print(format_code(build_multiqudit_code(3, 1)))

# %% [markdown]
# Codes export to JSON with integer numerators and denominators.

# %%
print(dumps_code(qutrit)[:300])
