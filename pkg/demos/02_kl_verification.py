# %% [markdown]
# # Checking the error-correction conditions
#
# For pure dephasing the conditions reduce to two facts: the codewords live
# on disjoint levels, and every codeword has the same S_Z moments up to 2t.

# %%
from spinqudit import build_xyz_code, build_z_code
from spinqudit.codes import swap_coefficients
from spinqudit.kl import ErrorSet, verify_b6_identity, verify_full_kl, verify_z_kl

report = verify_z_kl(build_z_code(3, 1))
print(report.verdict)
for k, row in enumerate(report.moments):
    print(k, [str(x) for x in row])

# %% [markdown]
# Swapping two amplitudes of |1_L> breaks the second moment.

# %%
broken = verify_z_kl(swap_coefficients(build_z_code(3, 1)))
print(broken.verdict, broken.violations[:2])

# %% [markdown]
# The general check builds every product of allowed error words and
# compares Gram matrices numerically.

# %%
full = verify_full_kl(build_xyz_code(3, 2), ErrorSet.all_words("XYZ", 2))
print(full.verdict, f"{full.max_abs_residual:.1e}")

# %% [markdown]
# A Z-only code is not expected to survive an S_X error.

# %%
print(verify_full_kl(build_z_code(3, 1), ErrorSet.all_words("X", 1)).verdict)

# %% [markdown]
# The ladder identity <S+S- + S-S+> = 2S(S+1) - 2<S_Z^2> holds on every codeword.

# %%
for row in verify_b6_identity(build_xyz_code(3, 1)).rows:
    print(row["label"], round(row["lhs"], 12), row["rhs"])
