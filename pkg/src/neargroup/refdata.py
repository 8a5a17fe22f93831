"""Embedded reference datasets used by the regression and acceptance suites.

Values are frozen from published 6-digit solver tables and printed modular
data for: the Z/8+8 family (b-phase rows, the 44 half-braiding triples of
the first solution, the boson action on the center, the dimension/twist
census of the Z/2 condensation, and the 9x9 factor of that condensation),
the g2 level-4 quantum group category, and the rank-10 modular datum
10_{0,1435}^{20,676}.

Two corrections relative to the printed sources, each forced by internal
consistency and verified against independent data: the column accompanying
the triple tables records omega^2 rather than omega (the twist is omega
itself, which matches the printed twist lists), and in the 9x9 matrix the
pair (u1, u2) is ordered so that the diagonal carries (1-sqrt2)*chi63 --
the unique choice that is unitary, satisfies the orthogonality constraint
u3*(u1-u2+u5-u6) = 0 (note sqrt2*chi63 = sqrt3*chi62), and matches the g2
data under zeta24 -> zeta24^{-1}.
"""
from __future__ import annotations

import numpy as np

SQ2, SQ3, SQ5, SQ6 = map(np.sqrt, (2.0, 3.0, 5.0, 6.0))
CHI6_2 = 2 + SQ6
CHI6_3 = 3 + SQ6
CHI24_4 = 4 + np.sqrt(24)
CHI24_5 = 5 + np.sqrt(24)
CHI20_5 = 5 + np.sqrt(20)
CHI20_6 = 6 + np.sqrt(20)
CHI5_2 = 2 + SQ5
CHI5_3 = 3 + SQ5
CHI80_8 = 8 + np.sqrt(80)
CHI80_9 = 9 + np.sqrt(80)
CHI180_14 = 14 + np.sqrt(180)


def zeta(n: int, k: int = 1) -> complex:
    return np.exp(2j * np.pi * k / n)


# --- Z/8+8 b-phase rows: (pairing m mod 16, c exponent over zeta_24, j(1..4))
Z8_B_ROWS = {
    "J8_1": (-1, -1, (0.872276, -2.70426, 2.9768, 3.14159)),
    "J8_1bar": (1, 1, (-0.872276, 2.70426, -2.9768, 3.14159)),
    "J8_2": (-1, -1, (-1.26498, 1.13347, -0.227903, 3.14159)),
    "J8_2bar": (1, 1, (1.26498, -1.13347, 0.227903, 3.14159)),
    "J8_3": (-3, 17, (-2.46405, 3.07557, 0.491887, 0.0)),
    "J8_3bar": (3, -17, (2.46405, -3.07557, -0.491887, 0.0)),
    "J8_4": (-3, 17, (1.28595, -1.50478, 1.47161, 0.0)),
    "J8_4bar": (3, -17, (-1.28595, 1.50478, -1.47161, 0.0)),
}

# --- Z/4 x Z/4 + 16 b-phase rows (j at the nine listed orbit representatives)
Z4Z4_B_KEYS = [(0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (1, 3), (2, 0), (2, 1), (2, 2)]
Z4Z4_B_ROWS = {
    "J1": (1.99103, 1.57080, -1.99103, 0.0, -2.44331, -2.23704, -1.57080, 2.44331, 0.0),
    "J2": (1.99103, 1.57080, -0.36516, 2.23704, -3.05447, 0.0, -1.57080, 2.44331, 0.0),
    "J3": (0.36516, 1.57080, -0.36516, 0.0, -3.05447, 2.23704, -1.57080, 3.05447, 0.0),
    "J4": (0.36516, 1.57080, -1.99103, -2.23704, -2.44331, 0.0, -1.57080, 3.05447, 0.0),
}

# --- the 44 triples for the first Z/8 solution:
#     (index, omega^2 exponent over zeta_48, tau, xi phases at x = 0..7)
Z8_TRIPLES = [
    (1, 24, 0, (1.8326, 0.840155, -2.87979, -2.67275, 1.8326, 0.840155, -2.87979, -2.67275)),
    (2, 40, 0, (-2.35619, -2.03783, -2.19092, 2.32649, -2.35619, 0.0297022, 0.620122, -1.88916)),
    (3, 40, 0, (-2.35619, 0.0297022, 0.620122, -1.88916, -2.35619, -2.03783, -2.19092, 2.32649)),
    (4, 16, 0, (-1.5708, 1.76553, -1.06745, 0.914113, 1.5708, 3.01288, 1.06745, 2.16146)),
    (5, 16, 0, (1.5708, 3.01288, 1.06745, 2.16146, -1.5708, 1.76553, -1.06745, 0.914113)),
    (6, 39, 1, (2.86523, -0.967181, -2.38552, -2.68973, 0.113755, -1.3573, 3.01698, -0.428819)),
    (7, 39, 1, (0.113755, -1.3573, 3.01698, -0.428819, 2.86523, -0.967181, -2.38552, -2.68973)),
    (8, 7, 1, (-0.960866, 0.764517, 0.941698, 2.72147, -2.6727, -0.665243, 1.79457, 0.432749)),
    (9, 7, 1, (0.7022, -0.89855, -0.94287, -2.38689, 0.955559, 1.98968, 0.619742, 2.31732)),
    (10, 7, 1, (-2.6727, -0.665243, 1.79457, 0.432749, -0.960866, 0.764517, 0.941698, 2.72147)),
    (11, 7, 1, (0.955559, 1.98968, 0.619742, 2.31732, 0.7022, -0.89855, -0.94287, -2.38689)),
    (12, 12, 2, (-2.67275, 1.8326, 0.840155, -2.87979, -2.67275, 1.8326, 0.840155, -2.87979)),
    (13, 28, 2, (2.32649, -2.35619, 0.0297022, 0.620122, -1.88916, -2.35619, -2.03783, -2.19092)),
    (14, 28, 2, (-1.88916, -2.35619, -2.03783, -2.19092, 2.32649, -2.35619, 0.0297022, 0.620122)),
    (15, 4, 2, (2.16146, -1.5708, 1.76553, -1.06745, 0.914113, 1.5708, 3.01288, 1.06745)),
    (16, 4, 2, (0.914113, 1.5708, 3.01288, 1.06745, 2.16146, -1.5708, 1.76553, -1.06745)),
    (17, 15, 3, (-0.428819, 2.86523, -0.967181, -2.38552, -2.68973, 0.113755, -1.3573, 3.01698)),
    (18, 15, 3, (-2.68973, 0.113755, -1.3573, 3.01698, -0.428819, 2.86523, -0.967181, -2.38552)),
    (19, 31, 3, (2.72147, -2.6727, -0.665243, 1.79457, 0.432749, -0.960866, 0.764517, 0.941698)),
    (20, 31, 3, (-2.38689, 0.955559, 1.98968, 0.619742, 2.31732, 0.7022, -0.89855, -0.94287)),
    (21, 31, 3, (2.31732, 0.7022, -0.89855, -0.94287, -2.38689, 0.955559, 1.98968, 0.619742)),
    (22, 31, 3, (0.432749, -0.960866, 0.764517, 0.941698, 2.72147, -2.6727, -0.665243, 1.79457)),
    (23, 24, 4, (-2.87979, -2.67275, 1.8326, 0.840155, -2.87979, -2.67275, 1.8326, 0.840155)),
    (24, 16, 4, (1.06745, 2.16146, -1.5708, 1.76553, -1.06745, 0.914113, 1.5708, 3.01288)),
    (25, 16, 4, (-1.06745, 0.914113, 1.5708, 3.01288, 1.06745, 2.16146, -1.5708, 1.76553)),
    (26, 40, 4, (-2.19092, 2.32649, -2.35619, 0.0297022, 0.620122, -1.88916, -2.35619, -2.03783)),
    (27, 40, 4, (0.620122, -1.88916, -2.35619, -2.03783, -2.19092, 2.32649, -2.35619, 0.0297022)),
    (28, 15, 5, (-2.38552, -2.68973, 0.113755, -1.3573, 3.01698, -0.428819, 2.86523, -0.967181)),
    (29, 15, 5, (3.01698, -0.428819, 2.86523, -0.967181, -2.38552, -2.68973, 0.113755, -1.3573)),
    (30, 31, 5, (1.79457, 0.432749, -0.960866, 0.764517, 0.941698, 2.72147, -2.6727, -0.665243)),
    (31, 31, 5, (0.619742, 2.31732, 0.7022, -0.89855, -0.94287, -2.38689, 0.955559, 1.98968)),
    (32, 31, 5, (-0.94287, -2.38689, 0.955559, 1.98968, 0.619742, 2.31732, 0.7022, -0.89855)),
    (33, 31, 5, (0.941698, 2.72147, -2.6727, -0.665243, 1.79457, 0.432749, -0.960866, 0.764517)),
    (34, 12, 6, (0.840155, -2.87979, -2.67275, 1.8326, 0.840155, -2.87979, -2.67275, 1.8326)),
    (35, 28, 6, (-2.03783, -2.19092, 2.32649, -2.35619, 0.0297022, 0.620122, -1.88916, -2.35619)),
    (36, 28, 6, (0.0297022, 0.620122, -1.88916, -2.35619, -2.03783, -2.19092, 2.32649, -2.35619)),
    (37, 4, 6, (3.01288, 1.06745, 2.16146, -1.5708, 1.76553, -1.06745, 0.914113, 1.5708)),
    (38, 4, 6, (1.76553, -1.06745, 0.914113, 1.5708, 3.01288, 1.06745, 2.16146, -1.5708)),
    (39, 39, 7, (-0.967181, -2.38552, -2.68973, 0.113755, -1.3573, 3.01698, -0.428819, 2.86523)),
    (40, 39, 7, (-1.3573, 3.01698, -0.428819, 2.86523, -0.967181, -2.38552, -2.68973, 0.113755)),
    (41, 7, 7, (-0.89855, -0.94287, -2.38689, 0.955559, 1.98968, 0.619742, 2.31732, 0.7022)),
    (42, 7, 7, (0.764517, 0.941698, 2.72147, -2.6727, -0.665243, 1.79457, 0.432749, -0.960866)),
    (43, 7, 7, (1.98968, 0.619742, 2.31732, 0.7022, -0.89855, -0.94287, -2.38689, 0.955559)),
    (44, 7, 7, (-0.665243, 1.79457, 0.432749, -0.960866, 0.764517, 0.941698, 2.72147, -2.6727)),
]

# --- boson action on the Z/8 center (indices into the table above for W's)
Z8_BOSON_W_ACTION = {1: 1, 12: 12, 23: 23, 34: 34}
Z8_BOSON_W_ACTION.update({i: i + 1 for i in (2, 4, 13, 15, 24, 26, 35, 37, 6, 17, 20, 28, 31, 39)})
Z8_BOSON_W_ACTION.update({i: i + 2 for i in (8, 9, 41, 42)})
Z8_BOSON_W_ACTION.update({i: i + 3 for i in (19, 30)})
Z8_BOSON_W_CENTRALIZED = {1, 12, 23, 34, 2, 3, 4, 5, 13, 14, 15, 16, 24, 25, 26, 27, 35, 36, 37, 38}

# --- dimension/twist census of the Z/2 condensation of the Z/8 center:
#     (dim, twist, multiplicity)
Z8_CONDENSED_CENSUS = [
    (1.0, 1 + 0j, 1),
    (1.0, zeta(8, -1), 2),
    (1.0, -1 + 0j, 1),
    (CHI24_5, 1 + 0j, 1),
    (CHI24_5, zeta(8, -1), 2),
    (CHI24_5, -1 + 0j, 1),
    (2 * CHI6_3, 1 + 0j, 2),
    (2 * CHI6_3, zeta(8, -3), 1),
    (2 * CHI6_3, zeta(8, 1), 1),
    (CHI6_3, 1 + 0j, 2),
    (CHI6_3, zeta(8, 3), 4),
    (CHI6_3, -1 + 0j, 2),
    (CHI24_4, zeta(12, 5), 1),
    (CHI24_4, zeta(12, -4), 1),
    (CHI24_4, zeta(24, 7), 2),
    (CHI24_4, zeta(24, -11), 2),
    (CHI24_4, zeta(12, 2), 1),
    (CHI24_4, zeta(12, -1), 1),
    (CHI6_2, zeta(4, -1), 2),
    (CHI6_2, zeta(8, -3), 4),
    (CHI6_2, zeta(4, 1), 2),
]


def _modular(labels, S, T):
    from .center import ModularData

    S = np.asarray(S, dtype=complex)
    T = np.asarray(T, dtype=complex)
    return ModularData(labels=list(labels), S=S, T=T)


def rank10_reference():
    """The rank-10 modular datum realized by the Z/4xZ/4 condensation."""
    X = CHI20_5
    s = -1 + 2j
    S = np.array(
        [
            [1, X, X, X, X, X, X, 4 * CHI5_2, 4 * CHI5_2, CHI80_9],
            [X, 3 * X, -X, -X, -X, -X, -X, 0, 0, X],
            [X, -X, 3 * X, -X, -X, -X, -X, 0, 0, X],
            [X, -X, -X, s * X, np.conj(s) * X, X, X, 0, 0, X],
            [X, -X, -X, np.conj(s) * X, s * X, X, X, 0, 0, X],
            [X, -X, -X, X, X, np.conj(s) * X, s * X, 0, 0, X],
            [X, -X, -X, X, X, s * X, np.conj(s) * X, 0, 0, X],
            [4 * CHI5_2, 0, 0, 0, 0, 0, 0, -2 * CHI5_3, CHI180_14, -4 * CHI5_2],
            [4 * CHI5_2, 0, 0, 0, 0, 0, 0, CHI180_14, -2 * CHI5_3, -4 * CHI5_2],
            [CHI80_9, X, X, X, X, X, X, -4 * CHI5_2, -4 * CHI5_2, 1],
        ],
        dtype=complex,
    )
    T = np.array([1, 1, 1, 1j, 1j, -1j, -1j, zeta(5, 2), zeta(5, 3), 1], dtype=complex)
    labels = ["1", "Za1", "Za2", "Zb1", "Zb2", "Zc1", "Zc2", "W1", "W2", "Y"]
    return _modular(labels, S, T)


def g2_level4_reference():
    """Modular data of the g2 level-4 quantum group category."""
    c62, c63 = CHI6_2, CHI6_3
    x31, x21 = 1 + SQ3, 1 + SQ2
    S = np.array(
        [
            [1, c62, c63, 2 * c62, 2 * c63, c62, CHI24_5, 2 * c62, c63],
            [c62, x31 * c62, SQ2 * c63, 2 * c62, 0, (2 - x31) * c62, -c62, -2 * c62, -SQ2 * c63],
            [c63, SQ2 * c63, (2 - x21) * c63, 0, -2 * c63, -SQ2 * c63, c63, 0, x21 * c63],
            [2 * c62, 2 * c62, 0, -2 * c62, 0, 2 * c62, -2 * c62, 2 * c62, 0],
            [2 * c63, 0, -2 * c63, 0, 0, 0, 2 * c63, 0, -2 * c63],
            [c62, (2 - x31) * c62, -SQ2 * c63, 2 * c62, 0, x31 * c62, -c62, -2 * c62, SQ2 * c63],
            [CHI24_5, -c62, c63, -2 * c62, 2 * c63, -c62, 1, -2 * c62, c63],
            [2 * c62, -2 * c62, 0, 2 * c62, 0, -2 * c62, -2 * c62, 2 * c62, 0],
            [c63, -SQ2 * c63, x21 * c63, 0, -2 * c63, SQ2 * c63, c63, 0, (2 - x21) * c63],
        ],
        dtype=complex,
    )
    T = np.array(
        [1, zeta(4), -1, zeta(12, 7), -zeta(8, 3), zeta(4), 1, zeta(3), -1], dtype=complex
    )
    labels = ["(0,0)", "(1,0)", "(0,1)", "(2,0)", "(1,1)", "(0,2)", "(3,0)", "(2,1)", "(4,0)"]
    return _modular(labels, S, T)


def z8_condensation_factor_reference():
    """The 9x9 factor of the Z/2 condensation of the Z/8 center.

    Label order: F(1), F(Y0), F(Z17), (Z26)1, (Z26)2, F(W2), F(W4),
    (W1)1, (W1)2.  This equals the g2 level-4 data with zeta24 replaced by
    its inverse.
    """
    c62, c63 = CHI6_2, CHI6_3
    u1 = (1 - SQ2) * c63
    u2 = (1 + SQ2) * c63
    u3 = SQ2 * c63
    u5 = (1 + SQ3) * c62
    u6 = (1 - SQ3) * c62
    S = np.array(
        [
            [1, CHI24_5, 2 * c63, c63, c63, 2 * c62, 2 * c62, c62, c62],
            [CHI24_5, 1, 2 * c63, c63, c63, -2 * c62, -2 * c62, -c62, -c62],
            [2 * c63, 2 * c63, 0, -2 * c63, -2 * c63, 0, 0, 0, 0],
            [c63, c63, -2 * c63, u1, u2, 0, 0, u3, -u3],
            [c63, c63, -2 * c63, u2, u1, 0, 0, -u3, u3],
            [2 * c62, -2 * c62, 0, 0, 0, -2 * c62, 2 * c62, 2 * c62, 2 * c62],
            [2 * c62, -2 * c62, 0, 0, 0, 2 * c62, 2 * c62, -2 * c62, -2 * c62],
            [c62, -c62, 0, u3, -u3, 2 * c62, -2 * c62, u5, u6],
            [c62, -c62, 0, -u3, u3, 2 * c62, -2 * c62, u6, u5],
        ],
        dtype=complex,
    )
    T = np.array(
        [1, 1, zeta(8), -1, -1, zeta(12, 5), zeta(3, -1), -1j, -1j], dtype=complex
    )
    labels = ["F(1)", "F(Y0)", "F(Z17)", "(Z26)1", "(Z26)2", "F(W2)", "F(W4)", "(W1)1", "(W1)2"]
    return _modular(labels, S, T)


REFERENCES = {
    "rank10": rank10_reference,
    "g2_level4": g2_level4_reference,
    "z8_factor9": z8_condensation_factor_reference,
}
