# %% [markdown]
# # Encoding and decoding with two-level rotations
#
# Every pulse rotates amplitude between two S_Z levels. The encoder prepares
# the codewords from the d lowest levels; the decoder funnels each error
# branch onto its own set of levels.

# %%
import numpy as np

from spinqudit import build_z_code
from spinqudit.pulses import apply_sequence, recover, synthesize_decoder, synthesize_encoder

code = build_z_code(3, 1)
enc = synthesize_encoder(code)
for step, cos in zip(enc.steps, enc.cosines()):
    print(step.m1, "->", step.m2, "cos =", cos)

# %%
dec = synthesize_decoder(code)
print(len(dec), "decoder rotations")
for b, branch in enumerate(dec.ancilla.branches):
    print("branch", b, [str(level) for level, _ in branch])

# %% [markdown]
# Encode a random qutrit state, hit it with S_Z, decode and read it back.

# %%
rng = np.random.default_rng(1)
logical = rng.normal(size=3) + 1j * rng.normal(size=3)
logical /= np.linalg.norm(logical)
psi = np.zeros(code.spin.dimension, dtype=complex)
psi[:3] = logical
encoded = apply_sequence(enc, psi)
damaged = np.diag(code.spin.m_values()) @ encoded
blocks, probs = recover(dec, apply_sequence(dec, damaged / np.linalg.norm(damaged)))
print("branch probabilities", np.round(probs, 12))
print("recovered", np.round(blocks[1] / np.sqrt(probs[1]), 12))
print("original ", np.round(logical, 12))
