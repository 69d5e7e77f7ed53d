"""Half-integer quantum numbers, spin operators and exact codeword amplitudes.

Basis convention: index ``i`` of a spin-S space holds ``m = -S + i``, i.e. the
levels are stored in ascending ``m``.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import numpy as np


@functools.total_ordering
@dataclass(frozen=True)
class HalfInt:
    """An exact integer or half-integer, stored as twice its value."""

    twice_value: int

    @classmethod
    def of(cls, value: int | Fraction | str | HalfInt) -> HalfInt:
        if isinstance(value, HalfInt):
            return value
        frac = Fraction(value)
        twice = 2 * frac
        if twice.denominator != 1:
            raise ValueError(f"{value} is not a multiple of 1/2")
        return cls(int(twice))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    def __float__(self) -> float:
        return self.twice_value / 2

    def __neg__(self) -> HalfInt:
        return HalfInt(-self.twice_value)

    def __abs__(self) -> HalfInt:
        return HalfInt(abs(self.twice_value))

    def __add__(self, other: HalfInt | int) -> HalfInt:
        return HalfInt(self.twice_value + HalfInt.of(other).twice_value)

    __radd__ = __add__

    def __sub__(self, other: HalfInt | int) -> HalfInt:
        return HalfInt(self.twice_value - HalfInt.of(other).twice_value)

    def __mul__(self, k: int) -> HalfInt:
        if not isinstance(k, int):
            return NotImplemented
        return HalfInt(self.twice_value * k)

    __rmul__ = __mul__

    def __lt__(self, other: HalfInt) -> bool:
        return self.twice_value < other.twice_value

    def __str__(self) -> str:
        if self.twice_value % 2 == 0:
            return str(self.twice_value // 2)
        return f"{self.twice_value}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


@dataclass(frozen=True)
class SpinSpace:
    """Hilbert space of a single spin S, with ``two_s = 2S``."""

    two_s: int

    def __post_init__(self):
        if self.two_s < 1:
            raise ValueError(f"two_s must be >= 1, got {self.two_s}")

    @classmethod
    def from_spin(cls, spin: int | Fraction | str | HalfInt) -> SpinSpace:
        return cls(HalfInt.of(spin).twice_value)

    @property
    def spin(self) -> HalfInt:
        return HalfInt(self.two_s)

    @property
    def dimension(self) -> int:
        return self.two_s + 1

    def levels(self) -> list[HalfInt]:
        return [HalfInt(-self.two_s + 2 * i) for i in range(self.dimension)]

    def m_values(self) -> np.ndarray:
        return (-self.two_s + 2 * np.arange(self.dimension)) / 2

    def contains(self, m: HalfInt) -> bool:
        return abs(m.twice_value) <= self.two_s and (m.twice_value - self.two_s) % 2 == 0

    def index(self, m: HalfInt) -> int:
        """Basis index of level ``m``."""
        if not self.contains(m):
            raise ValueError(f"level {m} is not in the spin-{self.spin} space")
        return (m.twice_value + self.two_s) // 2

    def basis_state(self, m: HalfInt) -> np.ndarray:
        vec = np.zeros(self.dimension, dtype=complex)
        vec[self.index(m)] = 1.0
        return vec


@dataclass(frozen=True)
class Amplitude:
    """Exact real number ``sign * sqrt(radicand)`` with rational ``radicand >= 0``."""

    sign: int
    radicand: Fraction

    def __post_init__(self):
        rad = Fraction(self.radicand)
        if rad < 0:
            raise ValueError("radicand must be non-negative")
        if self.sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or +1")
        sign = 0 if rad == 0 else self.sign
        if sign == 0 and rad != 0:
            raise ValueError("zero sign with nonzero radicand")
        object.__setattr__(self, "radicand", rad)
        object.__setattr__(self, "sign", sign)

    @classmethod
    def sqrt(cls, radicand: Rational | int | str, sign: int = 1) -> Amplitude:
        rad = Fraction(radicand)
        return cls(0 if rad == 0 else sign, rad)

    @classmethod
    def zero(cls) -> Amplitude:
        return cls(0, Fraction(0))

    def square(self) -> Fraction:
        return self.radicand

    def to_float(self) -> float:
        return self.sign * math.sqrt(self.radicand)

    def __float__(self) -> float:
        return self.to_float()

    def __neg__(self) -> Amplitude:
        return Amplitude(-self.sign, self.radicand)

    def __mul__(self, other: Amplitude) -> Amplitude:
        if not isinstance(other, Amplitude):
            return NotImplemented
        return Amplitude.sqrt(self.radicand * other.radicand, self.sign * other.sign)

    def __str__(self) -> str:
        prefix = "-" if self.sign < 0 else ""
        return f"{prefix}sqrt({self.radicand})"


@dataclass(frozen=True, eq=False)
class SpinOperator:
    """Dense matrix of an operator on a single spin space."""

    space: SpinSpace
    matrix: np.ndarray
    label: str

    def __matmul__(self, other: SpinOperator) -> SpinOperator:
        if other.space != self.space:
            raise ValueError("operators act on different spin spaces")
        return SpinOperator(self.space, self.matrix @ other.matrix, f"{self.label}{other.label}")

    def dagger(self) -> SpinOperator:
        return SpinOperator(self.space, self.matrix.conj().T, f"({self.label})^dag")


def make_identity(space: SpinSpace) -> SpinOperator:
    return SpinOperator(space, np.eye(space.dimension, dtype=complex), "I")


def make_sz(space: SpinSpace) -> SpinOperator:
    return SpinOperator(space, np.diag(space.m_values()).astype(complex), "Z")


def make_splus(space: SpinSpace) -> SpinOperator:
    """Raising operator, <m+1|S+|m> = sqrt(S(S+1) - m(m+1))."""
    s = space.two_s / 2
    m = space.m_values()[:-1]
    elements = np.sqrt(s * (s + 1) - m * (m + 1))
    return SpinOperator(space, np.diag(elements, k=-1).astype(complex), "+")


def make_sminus(space: SpinSpace) -> SpinOperator:
    plus = make_splus(space)
    return SpinOperator(space, plus.matrix.conj().T.copy(), "-")


def make_sx(space: SpinSpace) -> SpinOperator:
    plus, minus = make_splus(space).matrix, make_sminus(space).matrix
    return SpinOperator(space, (plus + minus) / 2, "X")


def make_sy(space: SpinSpace) -> SpinOperator:
    plus, minus = make_splus(space).matrix, make_sminus(space).matrix
    return SpinOperator(space, (plus - minus) / 2j, "Y")


_FACTORIES = {
    "I": make_identity,
    "Z": make_sz,
    "+": make_splus,
    "-": make_sminus,
    "X": make_sx,
    "Y": make_sy,
}


def make_operator(space: SpinSpace, letter: str) -> SpinOperator:
    """Single-letter operator lookup: one of ``I Z + - X Y``."""
    try:
        return _FACTORIES[letter](space)
    except KeyError:
        raise ValueError(f"unknown spin operator {letter!r}") from None
