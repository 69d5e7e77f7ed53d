"""Fault-tolerant logical qudits encoded in spin systems."""

from spinqudit.codes import (
    CodeFamily,
    CodeSpec,
    Codeword,
    ErrorModel,
    alt_qutrit_distance5,
    build_multiqudit_code,
    build_xyz_code,
    build_z_code,
    coeff_distance3,
    coeff_distance5,
)
from spinqudit.kl import ErrorSet, KLReport, moment_exact, verify_b6_identity, verify_full_kl, verify_z_kl
from spinqudit.pulses import PulseSequence, PulseStep, apply_sequence, synthesize_decoder, synthesize_encoder
from spinqudit.qec_sim import NoiseParams, dephasing_channel, lindblad_rk4, run_cycle, sweep_gain
from spinqudit.resources import emit_comparison, qubit_mapping_dim, qudit_dim
from spinqudit.spin_core import Amplitude, HalfInt, SpinSpace

__version__ = "0.1.0"
