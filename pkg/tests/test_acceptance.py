"""Acceptance criteria, one check per criterion.

Run ``pytest tests/test_acceptance.py -s`` (or execute this file directly)
to see one PASS/FAIL line per criterion.
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from reference_tables import INSTANCES, expected_terms
from spinqudit.codes import (
    alt_qutrit_distance5,
    build_multiqudit_code,
    build_xyz_code,
    build_z_code,
    coeff_distance5,
    swap_coefficients,
)
from spinqudit.kl import (
    ErrorSet,
    casimir_form,
    ladder_anticommutator_expectation,
    verify_b6_identity,
    verify_full_kl,
    verify_z_kl,
)
from spinqudit.pulses import apply_sequence, default_input_levels, recover
from spinqudit.qec_sim import (
    advantage_window,
    dephasing_channel,
    fig1b_table,
    fig3_table,
    gate_column,
    lindblad_rk4,
    log_grid,
    loglog_slope,
    pulse_pair,
)
from spinqudit.resources import qubit_mapping_dim, qudit_dim
from spinqudit.spin_core import SpinSpace, make_sz

TABULATED = {
    "z_qutrit_d3": lambda: build_z_code(3, 1),
    "z_ququart_d3": lambda: build_z_code(4, 1),
    "z_qutrit_d5": lambda: build_z_code(3, 2),
    "xyz_qutrit_d3": lambda: build_xyz_code(3, 1),
    "xyz_qutrit_d5": lambda: build_xyz_code(3, 2),
    "multi_qutrit_d3": lambda: build_multiqudit_code(3, 1),
    "multi_qutrit_d5": lambda: build_multiqudit_code(3, 2),
    "alt_qutrit_d5": alt_qutrit_distance5,
}


def report(number, title, ok, detail=""):
    print(f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}" + (f" ({detail})" if detail else ""))
    return ok


def random_states(rng, dim, count):
    raw = rng.normal(size=(count, dim)) + 1j * rng.normal(size=(count, dim))
    return raw / np.linalg.norm(raw, axis=1, keepdims=True)


# -- 1 ---------------------------------------------------------------------


def check_coefficients():
    mismatched = []
    for name, build in TABULATED.items():
        table, two_s, n = INSTANCES[name]
        code = build()
        got = [
            {tuple(m.twice_value for m in levels): amp.square() for levels, amp in cw.terms}
            for cw in code.codewords
        ]
        if code.spin.two_s != two_s or got != expected_terms(table, n):
            mismatched.append(name)
    a1 = coeff_distance5(3, 1)[0].square()
    ok = not mismatched and a1 == Fraction(7203, 42400)
    return ok, f"mismatched={mismatched}, a_1^2={a1}"


# -- 2 ---------------------------------------------------------------------


def check_kl():
    failures = []
    for d in range(2, 9):
        for t in (1, 2):
            rep = verify_z_kl(build_z_code(d, t))
            if not (rep.passed and rep.disjoint_supports):
                failures.append(f"z{d}{t}")
    worst = 0.0
    for d in range(2, 7):
        for t in (1, 2):
            rep = verify_full_kl(build_xyz_code(d, t), ErrorSet.all_words("XYZ", t), tol=1e-12)
            worst = max(worst, rep.max_offdiag, rep.max_diag_mismatch)
            if not rep.passed:
                failures.append(f"xyz{d}{t}")
    bad = verify_z_kl(swap_coefficients(build_z_code(3, 1)))
    mismatch = any(
        {v.get("lhs"), v.get("rhs")} == {"25/4", "33/4"} and v.get("n") == 2 for v in bad.violations
    )
    ok = not failures and worst <= 1e-12 and bad.verdict == "FAIL" and mismatch
    return ok, f"failures={failures}, worst residual={worst:.2e}, perturbed={bad.verdict}"


# -- 3 ---------------------------------------------------------------------


def check_b6():
    codes = [build() for build in TABULATED.values()]
    rows_ok = all(verify_b6_identity(c, tol=1e-12).passed for c in codes)
    rng = np.random.default_rng(2024)
    worst = 0.0
    for two_s in sorted({c.spin.two_s for c in codes}):
        space = SpinSpace(two_s)
        for psi in random_states(rng, space.dimension, 100):
            lhs = ladder_anticommutator_expectation(space, psi)
            worst = max(worst, abs(lhs - casimir_form(space, psi)) / max(1.0, abs(lhs)))
    return rows_ok and worst <= 1e-12, f"worst relative deviation on random states={worst:.2e}"


# -- 4 ---------------------------------------------------------------------


def check_round_trip():
    code = build_z_code(3, 1)
    space = code.spin
    enc, dec = pulse_pair(code)
    u = enc.unitary()
    vecs = np.real(code.vectors())
    inputs = [space.index(m) for m in default_input_levels(code)]
    enc_err = max(np.abs(u[:, i] - vecs[:, k]).max() for k, i in enumerate(inputs))

    sz = np.real(np.diag(make_sz(space).matrix))
    rng = np.random.default_rng(99)
    worst = 0.0
    for logical in random_states(rng, 3, 100):
        psi = np.zeros(space.dimension, dtype=complex)
        psi[inputs] = logical
        encoded = apply_sequence(enc, psi)
        for branch, damaged in enumerate((encoded, sz * encoded)):
            damaged = damaged / np.linalg.norm(damaged)
            blocks, probs = recover(dec, apply_sequence(dec, damaged))
            out = blocks[branch] / math.sqrt(probs[branch])
            worst = max(worst, np.abs(out - logical).max(), abs(1 - probs[branch]))
    ok = enc_err <= 1e-12 and worst <= 1e-12
    return ok, f"encoder error={enc_err:.1e}, recovery error={worst:.1e}"


# -- 5 ---------------------------------------------------------------------


def check_scaling():
    grid = log_grid(1e-4, 1e-2, 10)
    rows = fig1b_table(grid, d=3, logical_state=np.ones(3) / math.sqrt(3))
    slopes = [loglog_slope(grid, [r[k] for r in rows]) for k in ("E_uncorrected", "E_corr_d3", "E_corr_d5")]
    in_band = all(abs(s - target) <= 0.15 for s, target in zip(slopes, (1.0, 2.0, 3.0)))
    ordered = all(r["gain_d5"] > r["gain_d3"] for r in rows if r["t_over_T2"] <= 1e-3)
    detail = "slopes=" + ", ".join(f"{s:.3f}" for s in slopes) + f", inset ordering={ordered}"
    return in_band and ordered, detail


# -- 6 ---------------------------------------------------------------------


def check_crossover():
    rows = fig3_table(log_grid(1e-4, 1.0, 41))
    good = advantage_window(rows, gate_column(1e-3, 1e-4))
    worse = advantage_window(rows, gate_column(5e-3, 1e-4))
    ok = len(good) > 0 and set(worse) < set(good)
    return ok, f"window points: p=1e-3 -> {len(good)}, p=5e-3 -> {len(worse)}"


# -- 7 ---------------------------------------------------------------------


def check_channel_oracle():
    space = SpinSpace(9)
    c = make_sz(space).matrix
    rng = np.random.default_rng(5)
    worst = 0.0
    for _ in range(20):
        a = rng.normal(size=(10, 10)) + 1j * rng.normal(size=(10, 10))
        rho = a @ a.conj().T
        rho /= np.trace(rho)
        for gt in (0.01, 0.1):
            numeric = lindblad_rk4(rho, [c], None, gt, 1e-4)
            worst = max(worst, np.abs(numeric - dephasing_channel(rho, 1.0, gt, space)).max())
    return worst <= 1e-8, f"max deviation={worst:.1e}"


# -- 8 ---------------------------------------------------------------------


def check_resources():
    exact = qudit_dim(3, 1) == 30 and qudit_dim(3, 2) == 100
    builder = all(
        qudit_dim(d, t) == build_xyz_code(d, t).spin.dimension for d in range(2, 7) for t in (1, 2)
    )
    seps = [math.log2(qubit_mapping_dim(d, 3)) - math.log2(qudit_dim(d, 1)) for d in range(2, 9)]
    increasing = all(b > a for a, b in zip(seps, seps[1:]))
    detail = f"dims={exact}, builder={builder}, separation=" + ", ".join(f"{s:.2f}" for s in seps)
    return exact and builder and increasing, detail


CRITERIA = [
    (1, "coefficient reproduction", check_coefficients),
    (2, "KL certification", check_kl),
    (3, "ladder/Casimir identity", check_b6),
    (4, "pulse round trip", check_round_trip),
    (5, "scaling exponents", check_scaling),
    (6, "gate-imperfection crossover", check_crossover),
    (7, "channel oracle equivalence", check_channel_oracle),
    (8, "resource table", check_resources),
]


@pytest.mark.parametrize("number, title, check", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check):
    ok, detail = check()
    assert report(number, title, ok, detail), detail


if __name__ == "__main__":
    for number, title, check in CRITERIA:
        report(number, title, *check())
