"""Error-correction cycle under pure dephasing and imperfect pulses.

Time is measured in units of T2 = 1/gamma, so ``cycle_time`` is t/T2.
Collapse operator: ``sqrt(gamma) S_Z``.
"""

from __future__ import annotations

import csv
import functools
import io
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from spinqudit.codes import CodeFamily, build_z_code
from spinqudit.pulses import (
    PulseSequence,
    apply_sequence,
    default_input_levels,
    recover,
    synthesize_decoder,
    synthesize_encoder,
)
from spinqudit.spin_core import SpinSpace, make_sz


class TraceDriftError(RuntimeError):
    pass


@dataclass(frozen=True)
class NoiseParams:
    gamma: float = 1.0
    cycle_time: float = 0.0
    gate_time_ratio: float = 0.0
    gate_infidelity: float = 0.0

    def __post_init__(self):
        for name in ("gamma", "cycle_time", "gate_time_ratio", "gate_infidelity"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")

    @property
    def over_rotation(self) -> float:
        """Rotation-angle error per pulse: state fidelity cos^2(err) ~ 1 - infidelity."""
        return math.sqrt(self.gate_infidelity)


@dataclass(frozen=True)
class CycleResult:
    fidelity: float
    error: float
    branch_probabilities: tuple[float, ...]
    corrected: bool
    imperfect_gates: bool


def dephasing_channel(rho: np.ndarray, gamma: float, t: float, space: SpinSpace | None = None) -> np.ndarray:
    """Exact pure-dephasing map: ``rho_mn -> rho_mn exp(-gamma (m-n)^2 t / 2)``."""
    rho = np.asarray(rho)
    space = space or SpinSpace(rho.shape[0] - 1)
    m = space.m_values()
    return rho * np.exp(-0.5 * gamma * t * np.subtract.outer(m, m) ** 2)


def lindblad_rhs(rho: np.ndarray, collapse_ops: Sequence[np.ndarray], hamiltonian: np.ndarray | None) -> np.ndarray:
    drho = np.zeros_like(rho)
    if hamiltonian is not None:
        drho += -1j * (hamiltonian @ rho - rho @ hamiltonian)
    for c in collapse_ops:
        cd = c.conj().T
        cdc = cd @ c
        drho += c @ rho @ cd - 0.5 * (cdc @ rho + rho @ cdc)
    return drho


def lindblad_rk4(
    rho: np.ndarray,
    collapse_ops: Sequence[np.ndarray],
    hamiltonian: np.ndarray | None,
    t: float,
    dt: float,
    max_steps: int = 1_000_000,
) -> np.ndarray:
    """Fixed-step RK4 integration of the Lindblad equation (cross-check oracle).

    Collapse operators carry their rates, e.g. ``sqrt(gamma) * S_Z``.
    """
    if dt <= 0 or dt > t > 0:
        raise ValueError("need 0 < dt <= t")
    if t == 0:
        return np.array(rho, dtype=complex)
    n_steps = math.ceil(t / dt - 1e-12)
    if n_steps > max_steps:
        raise ValueError(f"{n_steps} steps exceeds max_steps={max_steps}")
    h = t / n_steps
    out = np.array(rho, dtype=complex)
    trace0 = np.trace(out).real
    for _ in range(n_steps):
        k1 = lindblad_rhs(out, collapse_ops, hamiltonian)
        k2 = lindblad_rhs(out + 0.5 * h * k1, collapse_ops, hamiltonian)
        k3 = lindblad_rhs(out + 0.5 * h * k2, collapse_ops, hamiltonian)
        k4 = lindblad_rhs(out + h * k3, collapse_ops, hamiltonian)
        out = out + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4)
        if abs(np.trace(out).real - trace0) > 1e-6:
            raise TraceDriftError("trace drift above 1e-6; reduce dt")
    return out


def coherent_z_error(state: np.ndarray, eps: float, space: SpinSpace | None = None) -> np.ndarray:
    """Apply ``exp(i eps S_Z)`` to a state vector."""
    state = np.asarray(state, dtype=complex)
    space = space or SpinSpace(state.shape[0] - 1)
    return np.exp(1j * eps * space.m_values()) * state


@functools.lru_cache(maxsize=64)
def pulse_pair(code: CodeFamily) -> tuple[PulseSequence, PulseSequence]:
    """Cached encoder and decoder of a code."""
    return synthesize_encoder(code), synthesize_decoder(code)


def _input_state(code: CodeFamily, logical: np.ndarray) -> np.ndarray:
    space = code.spin
    psi = np.zeros(space.dimension, dtype=complex)
    for k, m in enumerate(default_input_levels(code)):
        psi[space.index(m)] = logical[k]
    return psi


def _normalized(logical: Sequence[complex]) -> np.ndarray:
    logical = np.asarray(logical, dtype=complex)
    norm = np.linalg.norm(logical)
    if norm == 0:
        raise ValueError("logical state must be nonzero")
    return logical / norm


def run_cycle(
    code: CodeFamily,
    logical_state: Sequence[complex],
    noise: NoiseParams,
    corrected: bool = True,
    imperfect_gates: bool = False,
) -> CycleResult:
    """One storage cycle: encode, dephase, decode, measure the branch, relabel.

    The uncorrected baseline keeps the state on the ``d`` lowest bare levels
    for the same time. With ``imperfect_gates`` every pulse is over-rotated and
    followed by dephasing for one gate time. Weight that leaves all decoder
    branches counts as lost.
    """
    logical = _normalized(logical_state)
    if logical.shape[0] != code.spec.d:
        raise ValueError(f"logical state needs {code.spec.d} amplitudes")
    space = code.spin
    psi = _input_state(code, logical)
    rho = np.outer(psi, psi.conj())

    if not corrected:
        rho = dephasing_channel(rho, noise.gamma, noise.cycle_time, space)
        fid2 = float(np.real(np.vdot(psi, rho @ psi)))
        return CycleResult(math.sqrt(max(fid2, 0.0)), 1 - fid2, (float(np.trace(rho).real),), False, imperfect_gates)

    encoder, decoder = pulse_pair(code)
    over = noise.over_rotation if imperfect_gates else 0.0
    gate_noise = None
    if imperfect_gates and noise.gate_time_ratio > 0:
        def gate_noise(x):
            return dephasing_channel(x, noise.gamma, noise.gate_time_ratio, space)

    rho = apply_sequence(encoder, rho, over, gate_noise)
    rho = dephasing_channel(rho, noise.gamma, noise.cycle_time, space)
    rho = apply_sequence(decoder, rho, over, gate_noise)
    blocks, probs = recover(decoder, rho)
    rho_logical = sum(blocks)
    fid2 = float(np.real(np.vdot(logical, rho_logical @ logical)))
    return CycleResult(math.sqrt(max(fid2, 0.0)), 1 - fid2, tuple(probs), True, imperfect_gates)


def _error(code, logical, cycle_time, corrected, imperfect=False, gate_time_ratio=0.0, gate_infidelity=0.0):
    noise = NoiseParams(1.0, cycle_time, gate_time_ratio, gate_infidelity)
    return run_cycle(code, logical, noise, corrected, imperfect).error


def sweep_gain(
    code: CodeFamily,
    grid: Sequence[float],
    logical_state: Sequence[complex] | None = None,
) -> list[dict]:
    """Rows of t/T2, uncorrected error, corrected error and their ratio."""
    grid = list(grid)
    if grid != sorted(grid):
        raise ValueError("grid must be sorted ascending")
    logical = np.ones(code.spec.d) if logical_state is None else logical_state
    rows = []
    for x in grid:
        e_unc = _error(code, logical, x, False)
        e_cor = _error(code, logical, x, True)
        rows.append({
            "t_over_T2": x,
            "E_uncorrected": e_unc,
            "E_corrected": e_cor,
            "gain": e_unc / e_cor if e_cor > 0 else math.inf,
        })
    return rows


def loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares slope of log(y) against log(x)."""
    slope, _ = np.polyfit(np.log(xs), np.log(ys), 1)
    return float(slope)


def log_grid(lo: float, hi: float, points: int) -> list[float]:
    return [float(x) for x in np.logspace(math.log10(lo), math.log10(hi), points)]


def fig1b_table(grid: Sequence[float], d: int = 3, logical_state=None) -> list[dict]:
    """Uncorrected, distance-3 and distance-5 errors and gains on one grid."""
    d3, d5 = build_z_code(d, 1), build_z_code(d, 2)
    logical = np.ones(d) if logical_state is None else logical_state
    rows = []
    for x in grid:
        e_unc = _error(d3, logical, x, False)
        e3 = _error(d3, logical, x, True)
        e5 = _error(d5, logical, x, True)
        rows.append({
            "t_over_T2": x,
            "E_uncorrected": e_unc,
            "E_corr_d3": e3,
            "E_corr_d5": e5,
            "gain_d3": e_unc / e3 if e3 > 0 else math.inf,
            "gain_d5": e_unc / e5 if e5 > 0 else math.inf,
        })
    return rows


DEFAULT_GATE_CONDITIONS = ((1e-3, 1e-4), (5e-3, 1e-4), (1e-3, 1e-3))


def gate_column(gate_infidelity: float, gate_time_ratio: float) -> str:
    return f"E_corr_p{gate_infidelity:g}_tg{gate_time_ratio:g}"


def fig3_table(
    grid: Sequence[float],
    conditions: Sequence[tuple[float, float]] = DEFAULT_GATE_CONDITIONS,
    d: int = 3,
    logical_state=None,
) -> list[dict]:
    """Distance-3 cycle errors with ideal and imperfect pulses."""
    code = build_z_code(d, 1)
    logical = np.ones(d) if logical_state is None else logical_state
    rows = []
    for x in grid:
        row = {
            "t_over_T2": x,
            "E_uncorrected": _error(code, logical, x, False),
            "E_corrected": _error(code, logical, x, True),
        }
        for p, tg in conditions:
            row[gate_column(p, tg)] = _error(code, logical, x, True, True, tg, p)
        rows.append(row)
    return rows


def advantage_window(rows: Sequence[dict], column: str) -> list[float]:
    """Grid points where ``column`` beats the uncorrected error."""
    return [row["t_over_T2"] for row in rows if row[column] < row["E_uncorrected"]]


def rows_to_csv(rows: Sequence[dict]) -> str:
    """CSV text with every float written to 17 significant digits."""
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = list(rows[0])
    writer.writerow(header)
    for row in rows:
        writer.writerow([f"{row[k]:.17g}" if isinstance(row[k], float) else row[k] for k in header])
    return buf.getvalue()
