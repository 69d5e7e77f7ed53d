# %% [markdown]
# # Hilbert space of one spin versus surface-code qubits
#
# One spin of dimension 2t(2t+1)(2d-1) does the job of ceil(log2 d) logical
# qubits, each a rotated surface code of 2*distance^2 - 1 physical qubits.

# %%
import math

from spinqudit.resources import emit_comparison, rows_to_csv

print(rows_to_csv(emit_comparison(range(2, 9), [3, 5])))

# %% [markdown]
# The gap is linear against exponential, but it only jumps when d crosses a
# power of two, because a whole extra logical qubit is needed then.

# %%
for row in emit_comparison(range(2, 9), [3]):
    print(row.d, round(row.log2_qubit_dim - math.log2(row.qudit_dim), 2))
