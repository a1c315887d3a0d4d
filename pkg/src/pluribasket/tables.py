"""Closed-form coefficient tables for the canonical sequence when delta = 12.

Each level maps slot pairs ``(b, r)`` to a linear form in chi, P_m and the
packing counts eta, zeta, alpha, beta.  Epsilon forms count the prime
packings consumed between consecutive levels.

Case ``"i"`` has no (1, r) with r >= 6 at level 0; case ``"ii"`` has exactly
one (1, 6) and no (1, 5).  Entries marked ``# corrected`` differ from the
printed source; the unpacking oracle in :mod:`pluribasket.enumerator`
(``validate_forms``) pins down the only consistent reading.
"""

from __future__ import annotations

from typing import Dict, Tuple

from .linear import LinearForm

Slot = Tuple[int, int]
LevelTable = Dict[Slot, LinearForm]


def _level(rows) -> LevelTable:
    return {slot: LinearForm.parse(text) for slot, text in rows}


def _eps(rows) -> Dict[int, LinearForm]:
    return {n: LinearForm.parse(text) for n, text in rows}


CASE_I_LEVELS: Dict[int, LevelTable] = {
    7: _level([
        ((1, 2), "2chi - 3P3 + 2P4 - P5 + P6 - 2P7 + P8 + eta"),  # corrected: printed 3P4
        ((3, 7), "chi - P3 + P6 + P7 - P8 - eta"),
        ((2, 5), "chi + P3 - P4 + P5 - 3P6 + P8 + eta"),
        ((1, 3), "2chi + 2P3 - 2P4 + 2P6 - P7 - eta"),
        ((2, 7), "eta"),
        ((1, 4), "chi + 2P3 + P4 - 2P5 - P6 + P7 - eta"),
        ((1, 5), "-P3 + P4 + P5 + P6 - P7"),
    ]),
    8: _level([
        ((1, 2), "2chi - 3P3 + 2P4 - P5 + P6 - 2P7 + P8 + eta"),
        ((3, 7), "chi - P3 + P6 + P7 - P8 - eta"),
        ((2, 5), "chi + 2P3 - 4P6 + P9 + eta"),
        ((3, 8), "-P3 - P4 + P5 + P6 + P8 - P9"),
        ((1, 3), "2chi + 3P3 - P4 - P5 + P6 - P7 - P8 + P9 - eta"),
        ((2, 7), "eta"),
        ((1, 4), "chi + 2P3 + P4 - 2P5 - P6 + P7 - eta"),
        ((1, 5), "-P3 + P4 + P5 + P6 - P7"),
    ]),
    9: _level([
        ((1, 2), "2chi - 3P3 + 2P4 - P5 + P6 - 2P7 + P8 + eta - zeta"),
        ((4, 9), "zeta"),
        ((3, 7), "chi - P3 + P6 + P7 - P8 - eta - zeta"),
        ((2, 5), "chi + 2P3 - 4P6 + P9 + eta"),
        ((3, 8), "-P3 - P4 + P5 + P6 + P8 - P9"),
        ((1, 3), "2chi + 3P3 - P4 - P5 + P6 - P7 - P8 + P9 - eta"),
        ((2, 7), "eta"),
        ((1, 4), "chi + 3P3 + P4 - 2P5 + P7 - P8 - P9 + P10 - 2eta + zeta"),  # corrected: printed extra -P6
        ((2, 9), "-P3 - P6 + P8 + P9 - P10 + eta - zeta"),
        ((1, 5), "P4 + P5 + 2P6 - P7 - P8 - P9 + P10 - eta + zeta"),
    ]),
    10: _level([
        ((1, 2), "2chi - 3P3 + 2P4 - P5 + P6 - 2P7 + P8 + eta - zeta"),
        ((4, 9), "zeta"),
        ((3, 7), "chi - P3 + P6 + P7 - P8 - eta - zeta"),
        ((2, 5), "chi + 2P3 - 4P6 + P9 + eta"),
        ((3, 8), "-P3 - P4 + P5 + P6 + P8 - P9"),
        ((1, 3), "2chi + 3P3 - 2P7 - P8 + P9 - P10 + P11"),  # corrected: printed extra -eta
        ((3, 10), "-P4 - P5 + P6 + P7 + P10 - P11 - eta"),
        ((2, 7), "P4 + P5 - P6 - P7 - P10 + P11 + 2eta"),
        ((1, 4), "chi + 3P3 + P4 - 2P5 + P7 - P8 - P9 + P10 - 2eta + zeta"),
        ((2, 9), "-P3 - P6 + P8 + P9 - P10 + eta - zeta"),
        ((1, 5), "P4 + P5 + 2P6 - P7 - P8 - P9 + P10 - eta + zeta"),
    ]),
    11: _level([
        ((1, 2), "2chi - 3P3 + 2P4 - P5 + P6 - 2P7 + P8 + eta - zeta - alpha"),
        ((5, 11), "alpha"),
        ((4, 9), "zeta - alpha"),
        ((3, 7), "chi - P3 + P6 + P7 - P8 - eta - zeta"),
        ((2, 5), "chi + 2P3 - 4P6 + P9 + eta"),
        ((3, 8), "-P3 - P4 + P5 + P6 + P8 - P9 - beta"),
        ((4, 11), "beta"),
        ((1, 3), "2chi + 3P3 - 2P7 - P8 + P9 - P10 + P11 - beta"),  # corrected: printed extra -eta
        ((3, 10), "-P4 - P5 + P6 + P7 + P10 - P11 - eta"),
        ((2, 7), "-chi + P4 + 2P5 - P7 - P9 - P10 + P12 + 2eta + zeta + alpha + beta"),
        ((3, 11), "chi - P5 - P6 + P9 + P11 - P12 - zeta - alpha - beta"),
        ((1, 4), "3P3 + P4 - P5 + P6 + P7 - P8 - 2P9 + P10 - P11 + P12 - 2eta + 2zeta + alpha + beta"),
        ((2, 9), "-P3 - P6 + P8 + P9 - P10 + eta - zeta"),
        ((1, 5), "P4 + P5 + 2P6 - P7 - P8 - P9 + P10 - eta + zeta"),
    ]),
    12: _level([
        ((1, 2), "2chi - 3P3 + 2P4 - P5 + P6 - 2P7 + P8 + eta - zeta - alpha"),
        ((5, 11), "alpha"),
        ((4, 9), "zeta - alpha"),
        ((3, 7), "2chi + P3 + P4 - P5 + P6 + P7 - 2P8 - P12 + P13 - 2eta - zeta"),
        ((5, 12), "-chi - 2P3 - P4 + P5 + P8 + P12 - P13 + eta"),
        ((2, 5), "2chi + 4P3 + P4 - P5 - 4P6 - P8 + P9 - P12 + P13"),
        ((3, 8), "-P3 - P4 + P5 + P6 + P8 - P9 - beta"),
        ((4, 11), "beta"),
        ((1, 3), "2chi + 3P3 - 2P7 - P8 + P9 - P10 + P11 - beta"),  # corrected: printed extra -eta
        ((3, 10), "-P4 - P5 + P6 + P7 + P10 - P11 - eta"),
        ((2, 7), "-chi + P4 + 2P5 - P7 - P9 - P10 + P12 + 2eta + zeta + alpha + beta"),
        ((3, 11), "chi - P5 - P6 + P9 + P11 - P12 - zeta - alpha - beta"),
        ((1, 4), "3P3 + P4 - P5 + P6 + P7 - P8 - 2P9 + P10 - P11 + P12 - 2eta + 2zeta + alpha + beta"),
        ((2, 9), "-P3 - P6 + P8 + P9 - P10 + eta - zeta"),
        ((1, 5), "P4 + P5 + 2P6 - P7 - P8 - P9 + P10 - eta + zeta"),
    ]),
}

CASE_I_EPSILON: Dict[int, LinearForm] = _eps([
    # printed with the eps = n0_(1,5) terms, which cancel
    (6, "-3P2"),
    (7, "chi - P3 + P6 + P7 - P8"),
    (8, "-P3 - P4 + P5 + P6 + P8 - P9"),
    (9, "-P3 - P6 + P8 + P9 - P10 + eta"),
    (10, "-P4 - P5 + P6 + P7 + P10 - P11 - eta"),
    (11, "chi - P5 - P6 + P9 + P11 - P12 - zeta"),
    (12, "-chi - 2P3 - P4 + P5 + P8 + P12 - P13 + eta"),
])

CASE_II_LEVELS: Dict[int, LevelTable] = {
    0: _level([
        ((1, 2), "5chi - 4P3 + P4"),
        ((1, 3), "4chi + 2P3 - 3P4 + P5"),
        ((1, 4), "chi + P3 + 2P4 - P5 - 1"),
        ((1, 5), "0"),
        ((1, 6), "1"),
    ]),
    5: _level([
        ((1, 2), "3chi - 3P3 + P4 - 2P5 + P6 + 1"),
        ((2, 5), "2chi - P3 + 2P5 - P6 - 1"),
        ((1, 3), "2chi + 3P3 - 3P4 - P5 + P6 + 1"),
        ((1, 4), "chi + P3 + 2P4 - P5 - 1"),
        ((1, 5), "0"),
        ((1, 6), "1"),
    ]),
    7: _level([
        ((1, 2), "2chi - 2P3 + P4 - 2P5 - P7 + P8 + 2 + eta"),
        ((3, 7), "chi - P3 + P6 + P7 - P8 - 1 - eta"),
        ((2, 5), "chi + 2P5 - 2P6 - P7 + P8 + eta"),
        ((1, 3), "2chi + 3P3 - 3P4 - P5 + P6 + 1 - eta"),
        ((2, 7), "eta"),
        ((1, 4), "chi + P3 + 2P4 - P5 - 1 - eta"),
        ((1, 5), "0"),
        ((1, 6), "1"),
    ]),
    8: _level([
        ((1, 2), "2chi - 2P3 + P4 - 2P5 - P7 + P8 + 2 + eta"),
        ((3, 7), "chi - P3 + P6 + P7 - P8 - 1 - eta"),
        ((2, 5), "chi + P3 + P4 + P5 - 3P6 - P7 + P9 + 1 + eta"),
        ((3, 8), "-P3 - P4 + P5 + P6 + P8 - P9 - 1"),
        ((1, 3), "2chi + 4P3 - 2P4 - 2P5 - P8 + P9 + 2 - eta"),
        ((2, 7), "eta"),
        ((1, 4), "chi + P3 + 2P4 - P5 - 1 - eta"),
        ((1, 5), "0"),
        ((1, 6), "1"),
    ]),
    9: _level([
        ((1, 2), "2chi - 3P5 - P9 + P10 + 3"),
        ((4, 9), "-2P3 + P4 + P5 - P7 + P8 + P9 - P10 - 1 + eta"),
        ((3, 7), "chi + P3 - P4 - P5 + P6 + 2P7 - 2P8 - P9 + P10 - 2eta"),
        ((2, 5), "chi + P3 + P4 + P5 - 3P6 - P7 + P9 + 1 + eta"),
        ((3, 8), "-P3 - P4 + P5 + P6 + P8 - P9 - 1"),
        ((1, 3), "2chi + 4P3 - 2P4 - 2P5 - P8 + P9 + 2 - eta"),
        ((2, 7), "eta"),
        ((1, 4), "chi + P3 + 2P4 - P5 - 1 - eta"),
        ((1, 5), "0"),
        ((1, 6), "1"),
    ]),
    10: _level([
        ((1, 2), "2chi - 3P5 - P9 + P10 + 3"),
        ((4, 9), "-2P3 + P4 + P5 - P7 + P8 + P9 - P10 - 1 + eta"),
        ((3, 7), "chi + P3 - P4 - P5 + P6 + 2P7 - 2P8 - P9 + P10 - 2eta"),
        ((2, 5), "chi + P3 + P4 + P5 - 3P6 - P7 + P9 + 1 + eta"),
        ((3, 8), "-P3 - P4 + P5 + P6 + P8 - P9 - 1"),
        ((1, 3), "2chi + 5P3 - 2P4 - 2P5 - 2P6 - P8 + P9 - P10 + P11 + 4"),
        ((3, 10), "-P3 + 2P6 + P10 - P11 - 2 - eta"),
        ((2, 7), "P3 - 2P6 - P10 + P11 + 2 + 2eta"),
        ((1, 4), "chi + P3 + 2P4 - P5 - 1 - eta"),
        ((1, 5), "0"),
        ((1, 6), "1"),
    ]),
    11: _level([
        ((1, 2), "2chi - 3P5 - P9 + P10 + 3 - alpha"),
        ((5, 11), "alpha"),
        ((4, 9), "-2P3 + P4 + P5 - P7 + P8 + P9 - P10 - 1 + eta - alpha"),
        ((3, 7), "chi + P3 - P4 - P5 + P6 + 2P7 - 2P8 - P9 + P10 - 2eta"),
        ((2, 5), "chi + P3 + P4 + P5 - 3P6 - P7 + P9 + 1 + eta"),
        ((3, 8), "-P3 - P4 + P5 + P6 + P8 - P9 - 1 - beta"),
        ((4, 11), "beta"),
        ((1, 3), "2chi + 5P3 - 2P4 - 2P5 - 2P6 - P8 + P9 - P10 + P11 + 4 - beta"),
        ((3, 10), "-P3 + 2P6 + P10 - P11 - 2 - eta"),
        ((2, 7), "-chi + P5 - 2P6 + P8 - 2P10 + 4 + 3eta + alpha + beta"),
        ((3, 11), "chi + P3 - P5 - P8 + P10 + P11 - 2 - eta - alpha - beta"),
        ((1, 4), "2P4 + P8 - P10 - P11 + 1 + alpha + beta"),
        ((1, 5), "0"),
        ((1, 6), "1"),
    ]),
    12: _level([
        ((1, 2), "2chi - 3P5 - P9 + P10 + 3 - alpha"),
        ((5, 11), "alpha"),
        ((4, 9), "-2P3 + P4 + P5 - P7 + P8 + P9 - P10 - 1 + eta - alpha"),
        ((3, 7), "2chi + 4P3 - P4 - 3P5 + 3P7 - 3P8 - P9 + P10 + P13 + 1 - 3eta"),  # corrected: printed -eta
        ((5, 12), "-chi - 3P3 + 2P5 + P6 - P7 + P8 - P13 - 1 + eta"),  # corrected: printed -eta
        ((2, 5), "2chi + 4P3 + P4 - P5 - 4P6 - P8 + P9 + P13 + 2"),  # corrected: printed +2eta
        ((3, 8), "-P3 - P4 + P5 + P6 + P8 - P9 - 1 - beta"),
        ((4, 11), "beta"),
        ((1, 3), "2chi + 5P3 - 2P4 - 2P5 - 2P6 - P8 + P9 - P10 + P11 + 4 - beta"),
        ((3, 10), "-P3 + 2P6 + P10 - P11 - 2 - eta"),
        ((2, 7), "-chi + P5 - 2P6 + P8 - 2P10 + 4 + 3eta + alpha + beta"),
        ((3, 11), "chi + P3 - P5 - P8 + P10 + P11 - 2 - eta - alpha - beta"),
        ((1, 4), "2P4 + P8 - P10 - P11 + 1 + alpha + beta"),
        ((1, 5), "0"),
        ((1, 6), "1"),
    ]),
}

CASE_II_EPSILON: Dict[int, LinearForm] = _eps([
    (5, "2chi - P3 + 2P5 - P6 - 1"),
    (7, "chi - P3 + P6 + P7 - P8 - 1"),
    (8, "-P3 - P4 + P5 + P6 + P8 - P9 - 1"),
    (9, "-2P3 + P4 + P5 - P7 + P8 + P9 - P10 - 1 + eta"),
    (10, "-P3 + 2P6 + P10 - P11 - 2 - eta"),
    (11, "chi + P3 - P5 - P8 + P10 + P11 - 2 - eta"),
    (12, "-chi - 3P3 + 2P5 + P6 - P7 + P8 - P13 - 1 + eta"),  # corrected: printed -eta
])

LEVELS = {"i": CASE_I_LEVELS, "ii": CASE_II_LEVELS}
EPSILONS = {"i": CASE_I_EPSILON, "ii": CASE_II_EPSILON}

# Column order of the level-12 coefficient vector, descending in b/r.
SLOTS: Dict[str, Tuple[Slot, ...]] = {
    "i": tuple(CASE_I_LEVELS[12]),
    "ii": tuple(CASE_II_LEVELS[12]),
}
