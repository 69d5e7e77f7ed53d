"""Closed-form constructions of the spin-qudit codeword families.

Every coefficient is kept as an exact :class:`Amplitude`, so normalization and
moment conditions can be checked in rational arithmetic.
"""

from __future__ import annotations

import enum
import json
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from spinqudit.spin_core import Amplitude, HalfInt, SpinSpace

Levels = tuple[HalfInt, ...]


class ErrorModel(str, enum.Enum):
    Z_ONLY = "z"
    XYZ = "xyz"


@dataclass(frozen=True)
class CodeSpec:
    d: int
    t: int
    error_model: ErrorModel = ErrorModel.Z_ONLY
    n_qudits: int = 1

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"logical dimension must be >= 2, got {self.d}")
        if self.t not in (1, 2):
            raise ValueError(f"t must be 1 or 2, got {self.t}")
        if self.n_qudits not in (1, 2 * self.t + 1):
            raise ValueError(f"n_qudits must be 1 or {2 * self.t + 1} for t={self.t}")
        object.__setattr__(self, "error_model", ErrorModel(self.error_model))

    @property
    def distance(self) -> int:
        return 2 * self.t + 1


@dataclass(frozen=True)
class Codeword:
    """Logical basis state ``|label_L>`` as a sparse map from level tuples to amplitudes."""

    label: int
    terms: tuple[tuple[Levels, Amplitude], ...]

    @classmethod
    def from_mapping(cls, label: int, mapping: Mapping[Levels, Amplitude]) -> Codeword:
        items = [(tuple(levels), amp) for levels, amp in mapping.items() if amp.sign != 0]
        items.sort(key=lambda item: [m.twice_value for m in item[0]])
        return cls(label, tuple(items))

    def as_dict(self) -> dict[Levels, Amplitude]:
        return dict(self.terms)

    @property
    def support(self) -> frozenset[Levels]:
        return frozenset(levels for levels, _ in self.terms)

    def norm_squared(self) -> Fraction:
        return sum((amp.square() for _, amp in self.terms), Fraction(0))

    def is_mirror_symmetric(self) -> bool:
        amps = self.as_dict()
        return all(amps.get(tuple(-m for m in levels)) == amp for levels, amp in self.terms)


@dataclass(frozen=True)
class CodeFamily:
    spec: CodeSpec
    spin: SpinSpace
    codewords: tuple[Codeword, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.codewords) != self.spec.d:
            raise ValueError(f"expected {self.spec.d} codewords, got {len(self.codewords)}")
        for cw in self.codewords:
            for levels, _ in cw.terms:
                if len(levels) != self.spec.n_qudits:
                    raise ValueError(f"level tuple {levels} does not match n_qudits")
                if not all(self.spin.contains(m) for m in levels):
                    raise ValueError(f"level tuple {levels} outside spin-{self.spin.spin}")

    @property
    def n_qudits(self) -> int:
        return self.spec.n_qudits

    def occupied_levels(self) -> list[HalfInt]:
        """Sorted set of single-qudit levels used by any codeword."""
        return sorted({m for cw in self.codewords for levels, _ in cw.terms for m in levels})

    def supports_disjoint(self) -> bool:
        seen: set[Levels] = set()
        for cw in self.codewords:
            if seen & cw.support:
                return False
            seen |= cw.support
        return True

    def min_level_gap(self) -> HalfInt:
        levels = self.occupied_levels()
        return min(b - a for a, b in zip(levels, levels[1:]))

    def vector(self, label: int) -> np.ndarray:
        """Dense state vector of a single-qudit codeword."""
        if self.n_qudits != 1:
            raise ValueError("dense vectors are only built for single-qudit codes")
        vec = np.zeros(self.spin.dimension, dtype=complex)
        for (m,), amp in self.codewords[label].terms:
            vec[self.spin.index(m)] = amp.to_float()
        return vec

    def vectors(self) -> np.ndarray:
        """Columns are the codeword vectors, shape ``(dimension, d)``."""
        return np.stack([self.vector(k) for k in range(self.spec.d)], axis=1)


def _check_index(d: int, i: int) -> None:
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    if not 1 <= i <= d - 1:
        raise ValueError(f"coefficient index i={i} outside 1..{d - 1}")


def coeff_distance3(d: int, i: int) -> tuple[Amplitude, Amplitude]:
    """Inner/outer pair coefficients ``(a_i, b_i)`` of the distance-3 Z code."""
    _check_index(d, i)
    den = 8 * d - 4
    return (
        Amplitude.sqrt(Fraction(2 * d - 1 + i, den)),
        Amplitude.sqrt(Fraction(2 * d - 1 - i, den)),
    )


def coeff_distance5(d: int, i: int) -> tuple[Amplitude, Amplitude, Amplitude, Amplitude]:
    """Coefficients ``(a_i, b_i, c_i, d_i)`` of the distance-5 Z code.

    Each is a product of two square roots, folded into one radicand.
    """
    _check_index(d, i)
    base = 32 * d - 16
    shared_den = (
        96 * d**3 + 32 * d**2 * i - 160 * d**2 - 16 * d * i**2 - 16 * d * i + 84 * d
        + 8 * i**2 - 14
    )
    ab_num = (
        66 * d**3 + 2 * d**2 * i - 100 * d**2 - 14 * d * i**2 + 12 * d * i + 47 * d
        + 2 * i**3 + 4 * i**2 - 5 * i - 7
    )
    cd_num = (
        30 * d**3 + 30 * d**2 * i - 60 * d**2 - 2 * d * i**2 - 28 * d * i + 37 * d
        - 2 * i**3 + 4 * i**2 + 5 * i - 7
    )
    ab = Fraction(ab_num, shared_den)
    cd = Fraction(cd_num, shared_den)
    return (
        Amplitude.sqrt(Fraction(8 * d + 2 * i - 5, base) * ab),
        Amplitude.sqrt(Fraction(8 * d - 2 * i - 3, base) * ab),
        Amplitude.sqrt(Fraction(12 * d - 2 * i - 5, base) * cd),
        Amplitude.sqrt(Fraction(4 * d + 2 * i - 3, base) * cd),
    )


def _mirrored(pairs: Iterable[tuple[HalfInt, Amplitude]], n_qudits: int = 1) -> dict[Levels, Amplitude]:
    terms: dict[Levels, Amplitude] = {}
    for m, amp in pairs:
        for level in (-m, m):
            key = (level,) * n_qudits
            if key in terms:
                raise ValueError(f"level {level} assigned twice")
            terms[key] = amp
    return terms


def _z_code_pairs(d: int, t: int) -> tuple[SpinSpace, list[list[tuple[HalfInt, Amplitude]]]]:
    """Positive-level (m, amplitude) lists per codeword; the code is their mirror image."""
    if t == 1:
        # S = 2d - 3/2; centre level S/2 + 1/4 = d - 1/2
        spin = SpinSpace(4 * d - 3)
        centre = HalfInt(2 * d - 1)
        words = [[(centre, Amplitude.sqrt(Fraction(1, 2)))]]
        for i in range(1, d):
            a, b = coeff_distance3(d, i)
            words.append([(centre - i, a), (centre + i, b)])
        return spin, words
    if t == 2:
        # S = 4d - 5/2; |0_L> on S/4 + 1/8 = d - 1/2 and 3S/4 + 3/8 = 3d - 3/2
        spin = SpinSpace(8 * d - 5)
        words = [[
            (HalfInt(2 * d - 1), Amplitude.sqrt(Fraction(5, 16))),
            (HalfInt(6 * d - 3), Amplitude.sqrt(Fraction(3, 16))),
        ]]
        for i in range(1, d):
            a, b, c, dd = coeff_distance5(d, i)
            words.append([
                (HalfInt(4 * d - 1 - 2 * i), a),
                (HalfInt(4 * d - 3 + 2 * i), b),
                (HalfInt(2 * i - 1), c),
                (HalfInt(8 * d - 3 - 2 * i), dd),
            ])
        return spin, words
    raise ValueError(f"no closed-form construction for t={t}")


def _family(spec: CodeSpec, spin: SpinSpace, words, name: str, scale: int = 1) -> CodeFamily:
    codewords = tuple(
        Codeword.from_mapping(k, _mirrored(((m * scale, amp) for m, amp in pairs), spec.n_qudits))
        for k, pairs in enumerate(words)
    )
    return CodeFamily(spec, spin, codewords, name)


def build_z_code(d: int, t: int) -> CodeFamily:
    """Single-spin code correcting S_Z errors up to order ``t``."""
    spec = CodeSpec(d, t, ErrorModel.Z_ONLY, 1)
    spin, words = _z_code_pairs(d, t)
    return _family(spec, spin, words, f"z-d{d}-t{t}")


def build_xyz_code(d: int, t: int) -> CodeFamily:
    """Z code with every level scaled by ``2t+1``, in spin ``(2t+1) S_z + t``.

    The scaling leaves a gap of at least ``2t+1`` between occupied levels, so
    products of up to ``2t`` ladder operators cannot connect distinct levels.
    """
    spec = CodeSpec(d, t, ErrorModel.XYZ, 1)
    z_spin, words = _z_code_pairs(d, t)
    scale = 2 * t + 1
    spin = SpinSpace(scale * z_spin.two_s + 2 * t)
    return _family(spec, spin, words, f"xyz-d{d}-t{t}", scale=scale)


def build_multiqudit_code(d: int, t: int) -> CodeFamily:
    """Z-code coefficients on ``2t+1`` spins, each level replaced by ``|m>^(2t+1)``."""
    n = 2 * t + 1
    spec = CodeSpec(d, t, ErrorModel.XYZ, n)
    spin, words = _z_code_pairs(d, t)
    return _family(spec, spin, words, f"multi-d{d}-t{t}-n{n}")


def alt_qutrit_distance5() -> CodeFamily:
    """Alternative spin-19/2 distance-5 qutrit with different coefficients."""
    h = HalfInt
    words = [
        [(h(5), Amplitude.sqrt("3/10")), (h(15), Amplitude.sqrt("1/5"))],
        [
            (h(1), Amplitude.sqrt("1152/9225")),
            (h(9), Amplitude.sqrt("133/1025")),
            (h(11), Amplitude.sqrt("399/2050")),
            (h(19), Amplitude.sqrt("468/9225")),
        ],
        [
            (h(3), Amplitude.sqrt("1081/7700")),
            (h(7), Amplitude.sqrt("252/1650")),
            (h(13), Amplitude.sqrt("441/3300")),
            (h(17), Amplitude.sqrt("282/3850")),
        ],
    ]
    return _family(CodeSpec(3, 2, ErrorModel.Z_ONLY, 1), SpinSpace(19), words, "alt-qutrit-t2")


def swap_coefficients(code: CodeFamily, label: int = 1) -> CodeFamily:
    """Swap the amplitudes of the two innermost mirror pairs of one codeword.

    Used to produce a deliberately broken code; on the distance-3 qutrit this
    exchanges ``a_1`` and ``b_1``.
    """
    cw = code.codewords[label]
    amps = cw.as_dict()
    pairs = sorted({abs(levels[0]) for levels in amps}, key=lambda m: m.twice_value)
    if len(pairs) < 2:
        raise ValueError(f"codeword {label} has fewer than two level pairs")
    lo, hi = pairs[0], pairs[1]
    n = code.n_qudits
    swap = {lo: hi, hi: lo}
    new = {}
    for levels, amp in amps.items():
        m = levels[0]
        if abs(m) in swap:
            src = swap[abs(m)] if m.twice_value > 0 else -swap[abs(m)]
            new[levels] = amps[(src,) * n]
        else:
            new[levels] = amp
    words = list(code.codewords)
    words[label] = Codeword.from_mapping(label, new)
    return CodeFamily(code.spec, code.spin, tuple(words), f"{code.name}-swapped{label}")


def get_code(d: int, t: int, model: str = "z", n_qudits: int = 1) -> CodeFamily:
    """Dispatch on the selector used by the command line."""
    model = ErrorModel(model)
    if n_qudits != 1:
        if n_qudits != 2 * t + 1:
            raise ValueError(f"multi-qudit codes use {2 * t + 1} qudits for t={t}")
        return build_multiqudit_code(d, t)
    if model is ErrorModel.XYZ:
        return build_xyz_code(d, t)
    return build_z_code(d, t)


# -- serialization -----------------------------------------------------------


def code_to_dict(code: CodeFamily) -> dict:
    return {
        "name": code.name,
        "spec": {
            "d": code.spec.d,
            "t": code.spec.t,
            "error_model": code.spec.error_model.value,
            "n_qudits": code.spec.n_qudits,
        },
        "spin": code.spin.two_s,
        "codewords": [
            {
                "label": cw.label,
                "terms": [
                    {
                        "levels": [m.twice_value for m in levels],
                        "sign": amp.sign,
                        "p": amp.radicand.numerator,
                        "q": amp.radicand.denominator,
                    }
                    for levels, amp in cw.terms
                ],
            }
            for cw in code.codewords
        ],
    }


def code_from_dict(data: Mapping) -> CodeFamily:
    spec = CodeSpec(**data["spec"])
    codewords = []
    for entry in data["codewords"]:
        mapping = {
            tuple(HalfInt(tm) for tm in term["levels"]): Amplitude(
                term["sign"], Fraction(term["p"], term["q"])
            )
            for term in entry["terms"]
        }
        codewords.append(Codeword.from_mapping(entry["label"], mapping))
    codewords.sort(key=lambda cw: cw.label)
    return CodeFamily(spec, SpinSpace(data["spin"]), tuple(codewords), data.get("name", ""))


def dumps_code(code: CodeFamily) -> str:
    return json.dumps(code_to_dict(code), indent=2)


def loads_code(text: str) -> CodeFamily:
    return code_from_dict(json.loads(text))


def format_code(code: CodeFamily) -> str:
    """Ket-notation rendering, one codeword per line, mirror pairs grouped."""
    n = code.n_qudits
    suffix = "" if n == 1 else "_" + ",".join("ABCDEFGHIJ"[:n])
    lines = [f"{code.name}: spin {code.spin.spin}, d={code.spec.d}, distance {code.spec.distance}"]
    for cw in code.codewords:
        amps = cw.as_dict()
        done: set[HalfInt] = set()
        parts = []
        for levels, amp in sorted(cw.terms, key=lambda it: abs(it[0][0]).twice_value):
            m = abs(levels[0])
            if m in done:
                continue
            done.add(m)
            neg, pos = (-m,) * n, (m,) * n
            sign = "-" if amp.sign < 0 else ""
            if amps.get(neg) == amps.get(pos):
                parts.append(f"{sign}sqrt({amp.radicand})(|-{m}>{suffix} + |+{m}>{suffix})")
            else:
                for key in (neg, pos):
                    if key in amps:
                        a = amps[key]
                        s = "-" if a.sign < 0 else ""
                        lab = f"{key[0]}" if key[0].twice_value < 0 else f"+{key[0]}"
                        parts.append(f"{s}sqrt({a.radicand})|{lab}>{suffix}")
        lines.append(f"|{cw.label}_L> = " + " + ".join(parts))
    return "\n".join(lines)
