"""Encoding and decoding pulse sequences built from two-level y-rotations.

A step ``(m1, m2, theta)`` is the real rotation

    |m1> -> cos(theta)|m1> + sin(theta)|m2>
    |m2> -> -sin(theta)|m1> + cos(theta)|m2>

and acts as the identity on every other level.
"""

from __future__ import annotations

import json
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from spinqudit.codes import CodeFamily
from spinqudit.spin_core import Amplitude, HalfInt, SpinSpace, make_sz

ZERO_TOL = 1e-13


class SynthesisError(ValueError):
    pass


@dataclass(frozen=True)
class PulseStep:
    m1: HalfInt
    m2: HalfInt
    angle: float
    cos: Amplitude | None = None

    def __post_init__(self):
        if self.m1 == self.m2:
            raise ValueError("a rotation needs two distinct levels")

    @classmethod
    def exact(cls, m1: HalfInt, m2: HalfInt, cos: Amplitude, sin: Amplitude) -> PulseStep:
        if cos.square() + sin.square() != 1:
            raise ValueError("cos^2 + sin^2 must be 1")
        return cls(m1, m2, math.atan2(sin.to_float(), cos.to_float()), cos)

    def matrix(self, space: SpinSpace, over_rotation: float = 0.0) -> np.ndarray:
        u = np.eye(space.dimension)
        i, j = space.index(self.m1), space.index(self.m2)
        c, s = math.cos(self.angle + over_rotation), math.sin(self.angle + over_rotation)
        u[i, i], u[j, i], u[i, j], u[j, j] = c, s, -s, c
        return u


@dataclass(frozen=True)
class AncillaStep:
    """Branch tag measured after decoding.

    ``branches[b][k] = (level, sign)``: in branch ``b`` the logical amplitude
    ``k`` sits on ``level`` with the given sign.
    """

    branches: tuple[tuple[tuple[HalfInt, int], ...], ...]

    def recovery(self, space: SpinSpace) -> list[np.ndarray]:
        """Per-branch ``(d, dimension)`` maps from the branch levels to logical amplitudes."""
        maps = []
        for branch in self.branches:
            r = np.zeros((len(branch), space.dimension))
            for k, (level, sign) in enumerate(branch):
                r[k, space.index(level)] = sign
            maps.append(r)
        return maps


@dataclass(frozen=True)
class PulseSequence:
    space: SpinSpace
    steps: tuple[PulseStep, ...]
    ancilla: AncillaStep | None = None

    def __len__(self) -> int:
        return len(self.steps)

    def unitary(self, over_rotation: float = 0.0) -> np.ndarray:
        u = np.eye(self.space.dimension)
        for step in self.steps:
            u = step.matrix(self.space, over_rotation) @ u
        return u

    def cosines(self) -> list[Amplitude | float]:
        return [step.cos if step.cos is not None else math.cos(step.angle) for step in self.steps]

    def to_dict(self) -> dict:
        steps = []
        for step in self.steps:
            entry = {"m1": step.m1.twice_value, "m2": step.m2.twice_value, "angle": step.angle}
            if step.cos is not None:
                entry["cos"] = {
                    "sign": step.cos.sign,
                    "p": step.cos.radicand.numerator,
                    "q": step.cos.radicand.denominator,
                }
            else:
                entry["cos"] = math.cos(step.angle)
            steps.append(entry)
        ancilla = None
        if self.ancilla is not None:
            ancilla = [
                [{"level": level.twice_value, "sign": sign} for level, sign in branch]
                for branch in self.ancilla.branches
            ]
        return {"spin": self.space.two_s, "steps": steps, "ancilla": ancilla}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> PulseSequence:
        steps = []
        for entry in data["steps"]:
            cos = entry["cos"]
            exact = Amplitude(cos["sign"], Fraction(cos["p"], cos["q"])) if isinstance(cos, dict) else None
            steps.append(PulseStep(HalfInt(entry["m1"]), HalfInt(entry["m2"]), entry["angle"], exact))
        ancilla = None
        if data.get("ancilla") is not None:
            ancilla = AncillaStep(tuple(
                tuple((HalfInt(e["level"]), e["sign"]) for e in branch) for branch in data["ancilla"]
            ))
        return cls(SpinSpace(data["spin"]), tuple(steps), ancilla)


def _rotate_rows(step: PulseStep, space: SpinSpace, x: np.ndarray, over_rotation: float = 0.0) -> np.ndarray:
    i, j = space.index(step.m1), space.index(step.m2)
    c, s = math.cos(step.angle + over_rotation), math.sin(step.angle + over_rotation)
    out = np.array(x, copy=True)
    xi, xj = out[i].copy(), out[j].copy()
    out[i], out[j] = c * xi - s * xj, s * xi + c * xj
    return out


def apply_step(step: PulseStep, space: SpinSpace, x: np.ndarray, over_rotation: float = 0.0) -> np.ndarray:
    """Rotate a state vector or density matrix (``G rho G^T``) by one step."""
    out = _rotate_rows(step, space, np.asarray(x, dtype=complex), over_rotation)
    if out.ndim == 2:
        i, j = space.index(step.m1), space.index(step.m2)
        c, s = math.cos(step.angle + over_rotation), math.sin(step.angle + over_rotation)
        ci, cj = out[:, i].copy(), out[:, j].copy()
        out[:, i], out[:, j] = c * ci - s * cj, s * ci + c * cj
    return out


def apply_sequence(
    seq: PulseSequence,
    x: np.ndarray,
    over_rotation: float = 0.0,
    after_step: Callable[[np.ndarray], np.ndarray] | None = None,
) -> np.ndarray:
    """Apply every step in order to a state vector or density matrix.

    ``over_rotation`` is added to every step angle; ``after_step`` (e.g. a
    noise channel) runs after each pulse.
    """
    x = np.asarray(x)
    dim = seq.space.dimension
    if x.shape[0] != dim or (x.ndim == 2 and x.shape != (dim, dim)):
        raise ValueError(f"shape {x.shape} does not match dimension {dim}")
    out = np.array(x, dtype=complex, copy=True)
    for step in seq.steps:
        out = apply_step(step, seq.space, out, over_rotation)
        if after_step is not None:
            out = after_step(out)
    return out


# -- encoder -----------------------------------------------------------------


def default_input_levels(code: CodeFamily) -> list[HalfInt]:
    """The ``d`` lowest levels of the spin."""
    return code.spin.levels()[: code.spec.d]


def _by_abs(level: HalfInt) -> tuple[int, int]:
    return (abs(level.twice_value), level.twice_value)


def _staging_moves(
    space: SpinSpace, inputs: Sequence[HalfInt], anchors: Sequence[HalfInt], reserved: set[HalfInt]
) -> list[PulseStep]:
    """Swap-free moves (rotations by pi/2 into empty levels) taking input k to anchor k."""
    quarter = (Amplitude.zero(), Amplitude.sqrt(1))
    position = list(inputs)
    moves: list[PulseStep] = []
    pending = [k for k in range(len(inputs)) if position[k] != anchors[k]]
    while pending:
        occupied = set(position)
        ready = [k for k in pending if anchors[k] not in occupied]
        if ready:
            k = ready[0]
            moves.append(PulseStep.exact(position[k], anchors[k], *quarter))
            position[k] = anchors[k]
            pending.remove(k)
            continue
        # every pending target is occupied: a cycle, broken through an empty level
        free = [m for m in space.levels() if m not in occupied and m not in reserved]
        if not free:
            raise SynthesisError("no empty level available to break a staging cycle")
        k = pending[0]
        moves.append(PulseStep.exact(position[k], free[0], *quarter))
        position[k] = free[0]
    return moves


def _distribution_chain(terms: list[tuple[HalfInt, Amplitude]], spare: HalfInt | None) -> list[PulseStep]:
    """Spread unit amplitude on ``terms[0]`` over all terms, peeling one level per step."""
    steps: list[PulseStep] = []
    remaining = [sum((amp.square() for _, amp in terms[j:]), Fraction(0)) for j in range(len(terms))]
    if len(terms) == 1:
        level, amp = terms[0]
        if amp.sign < 0:
            if spare is None:
                raise SynthesisError("cannot flip the sign of a one-level codeword")
            steps.append(PulseStep.exact(level, spare, Amplitude.sqrt(1, -1), Amplitude.zero()))
        return steps
    for j in range(len(terms) - 1):
        level, amp = terms[j]
        nxt, nxt_amp = terms[j + 1]
        cos = Amplitude.sqrt(amp.square() / remaining[j], amp.sign)
        if j == len(terms) - 2:
            sin = Amplitude.sqrt(nxt_amp.square() / remaining[j], nxt_amp.sign)
        else:
            sin = Amplitude.sqrt(remaining[j + 1] / remaining[j])
        steps.append(PulseStep.exact(level, nxt, cos, sin))
    return steps


def synthesize_encoder(code: CodeFamily, input_levels: Sequence[HalfInt] | None = None) -> PulseSequence:
    """Rotation sequence taking ``|input_levels[k]>`` to ``|k_L>``.

    Each input is first moved onto the smallest-|m| level of its own codeword
    (its anchor); each codeword is then spread over its support as a chain
    running outward in |m|. Every cosine is exact.
    """
    if code.n_qudits != 1:
        raise SynthesisError("pulse synthesis covers single-qudit codes only")
    space = code.spin
    inputs = list(default_input_levels(code) if input_levels is None else input_levels)
    if len(inputs) != code.spec.d or len(set(inputs)) != len(inputs):
        raise SynthesisError("need exactly d distinct input levels")
    if not all(space.contains(m) for m in inputs):
        raise SynthesisError("input level outside the spin space")
    if not code.supports_disjoint():
        raise SynthesisError("codeword supports overlap")

    chains = []
    for cw in code.codewords:
        terms = sorted(((levels[0], amp) for levels, amp in cw.terms), key=lambda it: _by_abs(it[0]))
        if not terms:
            raise SynthesisError(f"codeword {cw.label} is empty")
        chains.append(terms)
    anchors = [terms[0][0] for terms in chains]
    support = {m for terms in chains for m, _ in terms}

    steps = _staging_moves(space, inputs, anchors, reserved=support)
    free = [m for m in space.levels() if m not in support]
    for terms in chains:
        steps.extend(_distribution_chain(terms, free[0] if free else None))
    return PulseSequence(space, tuple(steps))


# -- decoder -----------------------------------------------------------------


def branch_vectors(code: CodeFamily, t: int | None = None) -> np.ndarray:
    """Orthonormalized ``S_Z^b |k_L>`` for b = 0..t, shape ``(t+1, d, dimension)``.

    The Gram matrix of ``{S_Z^b |k>}`` is the same for every ``k`` (moment
    conditions), so one Cholesky factor orthonormalizes all codewords alike.
    """
    t = code.spec.t if t is None else t
    sz = np.real(np.diag(make_sz(code.spin).matrix))
    base = np.real(code.vectors()).T  # (d, dim)
    powers = np.stack([base * sz**b for b in range(t + 1)])  # (t+1, d, dim)
    gram = np.einsum("akx,bkx->abk", powers, powers).mean(axis=2)
    lower = np.linalg.cholesky(gram)
    return np.einsum("ab,bkx->akx", np.linalg.inv(lower), powers)


def _mirror_pair_steps(code: CodeFamily) -> list[PulseStep]:
    """Rotate each occupied pair ``|-m>, |+m>`` into its symmetric/antisymmetric combination."""
    levels = set(code.occupied_levels())
    half = (Amplitude.sqrt(Fraction(1, 2)), Amplitude.sqrt(Fraction(1, 2), -1))
    return [
        PulseStep.exact(-m, m, *half)
        for m in sorted(levels, key=lambda lv: lv.twice_value)
        if m.twice_value > 0 and -m in levels
    ]


def synthesize_decoder(code: CodeFamily, t: int | None = None) -> PulseSequence:
    """Rotation sequence sending each error branch of each codeword to one level.

    Branch ``b`` holds the component of the state along the orthonormalized
    ``S_Z^b |k_L>``. After the sequence, branch ``b`` of logical ``k`` sits on
    a single level recorded in the ancilla step, so a branch measurement
    followed by the recorded relabelling recovers the logical state.
    """
    if code.n_qudits != 1:
        raise SynthesisError("pulse synthesis covers single-qudit codes only")
    space = code.spin
    t = code.spec.t if t is None else t
    vectors = branch_vectors(code, t)
    steps = _mirror_pair_steps(code)
    current = vectors.reshape(-1, space.dimension).T  # columns: branch-major
    for step in steps:
        current = _rotate_rows(step, space, current)

    levels = space.levels()
    order = sorted(range(space.dimension), key=lambda i: _by_abs(levels[i]))
    fixed: set[int] = set()
    outputs: list[tuple[HalfInt, int]] = []
    for col in range(current.shape[1]):
        v = current[:, col]
        live = [i for i in order if i not in fixed and abs(v[i]) > ZERO_TOL]
        if not live:
            raise SynthesisError("branch vector vanished during elimination")
        target = live[-1]  # gather outward: the largest-|m| live level receives the branch
        for i in live:
            if i == target:
                continue
            vo, vl = current[target, col], current[i, col]
            step = PulseStep(levels[target], levels[i], math.atan2(-vl, vo))
            steps.append(step)
            current = _rotate_rows(step, space, current)
        if not np.allclose(np.delete(current[:, col], target), 0, atol=1e-10):
            raise SynthesisError("elimination left residual amplitude")
        fixed.add(target)
        outputs.append((levels[target], 1 if current[target, col] > 0 else -1))

    d = code.spec.d
    branches = tuple(tuple(outputs[b * d:(b + 1) * d]) for b in range(t + 1))
    return PulseSequence(space, tuple(steps), AncillaStep(branches))


def recover(seq: PulseSequence, x: np.ndarray) -> tuple[list[np.ndarray], list[float]]:
    """Project a decoded state onto each branch and relabel it to logical amplitudes.

    Returns per-branch logical vectors (or ``d x d`` density blocks) and branch
    probabilities.
    """
    if seq.ancilla is None:
        raise ValueError("sequence has no ancilla step")
    out, probs = [], []
    for r in seq.ancilla.recovery(seq.space):
        block = r @ x if x.ndim == 1 else r @ x @ r.T
        out.append(block)
        probs.append(float(np.real(np.vdot(block, block) if x.ndim == 1 else np.trace(block))))
    return out, probs
