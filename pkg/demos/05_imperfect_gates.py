# %% [markdown]
# # When do faulty pulses erase the benefit?
#
# Each pulse is over-rotated by sqrt(p) and takes time t_g during which the
# spin keeps dephasing. Correction only pays off in a window of storage times.

# %%
from spinqudit.qec_sim import advantage_window, fig3_table, gate_column, log_grid

rows = fig3_table(log_grid(1e-4, 1.0, 41))
for p, tg in ((1e-3, 1e-4), (5e-3, 1e-4), (1e-3, 1e-3)):
    window = advantage_window(rows, gate_column(p, tg))
    span = f"{window[0]:.3g} .. {window[-1]:.3g}" if window else "none"
    print(f"p={p:g} t_g={tg:g}: {len(window)} grid points, {span}")

# %%
ideal = advantage_window(rows, "E_corrected")
print("ideal pulses:", f"{ideal[0]:.3g} .. {ideal[-1]:.3g}")
