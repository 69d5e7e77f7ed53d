from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinqudit.spin_core import (
    Amplitude,
    HalfInt,
    SpinSpace,
    make_operator,
    make_sminus,
    make_splus,
    make_sx,
    make_sy,
    make_sz,
)

SPINS = [1, 9, 29, 99]  # 2S


def test_halfint_exact_arithmetic():
    a = HalfInt.of("5/2")
    assert a.twice_value == 5
    assert a + HalfInt.of("1/2") == HalfInt.of(3)
    assert -a == HalfInt(-5)
    assert 3 * a == HalfInt.of("15/2")
    assert a.value == Fraction(5, 2)
    assert HalfInt(-3) < HalfInt(1)
    with pytest.raises(ValueError):
        HalfInt.of("1/3")


def test_spin_space_indexing():
    space = SpinSpace.from_spin("9/2")
    assert space.dimension == 10
    assert space.index(HalfInt(-9)) == 0
    assert space.index(HalfInt(9)) == 9
    assert not space.contains(HalfInt(4))
    with pytest.raises(ValueError):
        space.index(HalfInt(11))
    with pytest.raises(ValueError):
        SpinSpace(0)


def test_amplitude_square_and_float():
    amp = Amplitude.sqrt(Fraction(10, 20))
    assert amp.square() == Fraction(1, 2)
    assert amp.to_float() == pytest.approx(np.sqrt(0.5), abs=1e-16)
    assert (-amp).to_float() == pytest.approx(-np.sqrt(0.5))
    assert (amp * Amplitude.sqrt(2, -1)).square() == 1
    assert Amplitude.sqrt(0).sign == 0


def test_sz_spin_half():
    sz = make_sz(SpinSpace(1)).matrix
    assert np.allclose(sz, np.diag([-0.5, 0.5]))


def test_sz_spin_nine_halves():
    sz = make_sz(SpinSpace(9)).matrix
    assert np.allclose(np.diag(sz), np.arange(-4.5, 5.0, 1.0))
    assert np.trace(sz) == 0


def test_splus_bottom_element_is_three():
    # sqrt(S(S+1) - m(m+1)) at S=9/2, m=-9/2: sqrt(99/4 - 63/4) = 3
    plus = make_splus(SpinSpace(9)).matrix
    assert plus[1, 0] == pytest.approx(3.0, abs=1e-14)


def test_splus_spin_half_and_top():
    plus = make_splus(SpinSpace(1)).matrix
    assert np.allclose(plus, [[0, 0], [1, 0]])
    space = SpinSpace(9)
    top = space.basis_state(HalfInt(9))
    assert np.allclose(make_splus(space).matrix @ top, 0)


def test_sx_spin_half():
    assert np.allclose(make_sx(SpinSpace(1)).matrix, [[0, 0.5], [0.5, 0]])


@pytest.mark.parametrize("two_s", SPINS)
def test_su2_commutator_and_casimir(two_s):
    space = SpinSpace(two_s)
    sx, sy, sz = make_sx(space).matrix, make_sy(space).matrix, make_sz(space).matrix
    assert np.abs(sx @ sy - sy @ sx - 1j * sz).max() < 1e-12
    s = two_s / 2
    casimir = sx @ sx + sy @ sy + sz @ sz
    assert np.abs(casimir - s * (s + 1) * np.eye(space.dimension)).max() < 1e-12 * max(1, s * s)


@pytest.mark.parametrize("two_s", SPINS)
def test_ladders_are_adjoint_and_hermitian_combinations(two_s):
    space = SpinSpace(two_s)
    plus, minus = make_splus(space).matrix, make_sminus(space).matrix
    assert np.array_equal(minus, plus.conj().T)
    for op in (make_sx(space).matrix, make_sy(space).matrix):
        assert np.allclose(op, op.conj().T)


def test_operator_lookup():
    space = SpinSpace(3)
    assert make_operator(space, "Z").label == "Z"
    assert np.allclose((make_operator(space, "+") @ make_operator(space, "-")).matrix,
                       make_splus(space).matrix @ make_sminus(space).matrix)
    with pytest.raises(ValueError):
        make_operator(space, "Q")


@given(st.integers(0, 10**6), st.integers(1, 10**6), st.sampled_from([-1, 1]))
def test_amplitude_square_is_exact(p, q, sign):
    amp = Amplitude.sqrt(Fraction(p, q), sign)
    assert amp.square() == Fraction(p, q)
    assert amp.to_float() == pytest.approx(amp.sign * np.sqrt(p / q), rel=1e-15, abs=1e-300)
