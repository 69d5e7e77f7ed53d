"""Codeword coefficients for the explicitly tabulated codes.

Each codeword maps ``2m`` (positive half of a mirror pair) to the squared
amplitude as printed, unreduced. All listed amplitudes are positive.
"""

from fractions import Fraction as F

Z_QUTRIT_D3 = [
    {5: F(10, 20)},
    {3: F(6, 20), 7: F(4, 20)},
    {1: F(7, 20), 9: F(3, 20)},
]

Z_QUQUART_D3 = [
    {7: F(14, 28)},
    {5: F(8, 28), 9: F(6, 28)},
    {3: F(9, 28), 11: F(5, 28)},
    {1: F(10, 28), 13: F(4, 28)},
]

Z_QUTRIT_D5 = [
    {5: F(5, 16), 15: F(3, 16)},
    {1: F(5423, 42400), 9: F(7203, 42400), 11: F(6517, 42400), 19: F(2057, 42400)},
    {3: F(3294, 22800), 7: F(3749, 22800), 13: F(2771, 22800), 17: F(1586, 22800)},
]

XYZ_QUTRIT_D3 = [
    {15: F(10, 20)},
    {9: F(6, 20), 21: F(4, 20)},
    {3: F(7, 20), 27: F(3, 20)},
]

XYZ_QUTRIT_D5 = [
    {25: F(5, 16), 75: F(3, 16)},
    {5: F(5423, 42400), 45: F(7203, 42400), 55: F(6517, 42400), 95: F(2057, 42400)},
    {15: F(3294, 22800), 35: F(3749, 22800), 65: F(2771, 22800), 85: F(1586, 22800)},
]

ALT_QUTRIT_D5 = [
    {5: F(3, 10), 15: F(1, 5)},
    {1: F(1152, 9225), 9: F(133, 1025), 11: F(399, 2050), 19: F(468, 9225)},
    {3: F(1081, 7700), 7: F(252, 1650), 13: F(441, 3300), 17: F(282, 3850)},
]

# (table, 2S, n_qudits)
INSTANCES = {
    "z_qutrit_d3": (Z_QUTRIT_D3, 9, 1),
    "z_ququart_d3": (Z_QUQUART_D3, 13, 1),
    "z_qutrit_d5": (Z_QUTRIT_D5, 19, 1),
    "xyz_qutrit_d3": (XYZ_QUTRIT_D3, 29, 1),
    "xyz_qutrit_d5": (XYZ_QUTRIT_D5, 99, 1),
    "multi_qutrit_d3": (Z_QUTRIT_D3, 9, 3),
    "multi_qutrit_d5": (Z_QUTRIT_D5, 19, 5),
    "alt_qutrit_d5": (ALT_QUTRIT_D5, 19, 1),
}


def expected_terms(table, n_qudits):
    """Full mirror-symmetric map ``(2m, ...) -> amplitude^2`` per codeword."""
    out = []
    for word in table:
        terms = {}
        for twice_m, sq in word.items():
            for tm in (-twice_m, twice_m):
                terms[(tm,) * n_qudits] = sq
        out.append(terms)
    return out
