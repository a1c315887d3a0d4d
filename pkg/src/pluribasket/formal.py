"""Formal (weighted) baskets: Euler characteristics chi_m and volume K^3.

A formal basket is a triple ``(B, chi, chi2)``.  Its invariants are defined
purely from sigma, sigma' and Delta^m of ``B``:

    chi_2 = chi2
    chi_3 = -sigma + 10 chi + 5 chi2
    K^3   = -sigma + sigma' + 6 chi + 2 chi2
    chi_{m+1} - chi_m = m^2/2 (K^3 - sigma') + m/2 sigma - 2 chi + Delta^m
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple

from .basket import Basket, BasketError, Pair, delta_n_basket, sigma, sigma_prime

__all__ = [
    "NonIntegerChi",
    "InfeasibleProfile",
    "FormalBasket",
    "PluriProfile",
    "k_cubed",
    "chi_m",
    "chi_sequence",
    "distinct_packings",
    "preserves_levels",
    "is_minimal_positive",
    "DELTA_FORMS",
    "delta_from_profile",
    "solve_b0",
]

CASES = ("i", "ii")


class NonIntegerChi(ArithmeticError):
    pass


class InfeasibleProfile(ValueError):
    """A linear count or epsilon went negative.  ``constraint`` names it."""

    def __init__(self, constraint: str, value: int):
        super().__init__(f"{constraint} = {value} < 0")
        self.constraint = constraint
        self.value = value


@dataclass(frozen=True)
class FormalBasket:
    basket: Basket
    chi: int
    chi2: int = 0

    def __post_init__(self):
        if self.chi2 < 0:
            raise BasketError(f"chi2 must be non-negative, got {self.chi2}")

    def with_basket(self, B: Basket) -> "FormalBasket":
        return FormalBasket(B, self.chi, self.chi2)


def k_cubed(F: FormalBasket) -> Fraction:
    B = F.basket
    return -sigma(B) + sigma_prime(B) + 6 * F.chi + 2 * F.chi2


def chi_sequence(F: FormalBasket, upto: int) -> Dict[int, int]:
    """``{m: chi_m}`` for ``2 <= m <= upto``."""
    B = F.basket
    s = sigma(B)
    k3_minus_sp = -s + 6 * F.chi + 2 * F.chi2
    out = {2: F.chi2, 3: -s + 10 * F.chi + 5 * F.chi2}
    cur = Fraction(out[3])
    for m in range(3, upto):
        cur += Fraction(m * m, 2) * k3_minus_sp + Fraction(m, 2) * s - 2 * F.chi + delta_n_basket(B, m)
        if cur.denominator != 1:
            raise NonIntegerChi(f"chi_{m + 1} = {cur} is not an integer")
        out[m + 1] = int(cur)
    return {m: v for m, v in out.items() if m <= upto}


def chi_m(F: FormalBasket, m: int) -> int:
    if m < 2:
        raise ValueError(f"chi_m is defined for m >= 2, got {m}")
    return chi_sequence(F, m)[m]


def preserves_levels(p1: Pair, p2: Pair, level: int) -> bool:
    """True iff packing ``p1`` with ``p2`` keeps Delta^j for all ``2 <= j <= level``.

    Delta^j survives a packing exactly when both fractions sit in one closed
    interval ``[d/j, (d+1)/j]``.
    """
    lo, hi = sorted((p1, p2), key=lambda p: p.value)
    for j in range(2, level + 1):
        d = lo.b * j // lo.r
        if hi.b * j > (d + 1) * hi.r:
            return False
    return True


def distinct_packings(B: Basket, level: Optional[int] = None) -> Iterator[Tuple[Pair, Pair, Basket]]:
    """Single packings of two entries with different fractions ``b/r``.

    Merging two copies of one fraction changes no invariant, so those moves
    are left out.  With ``level`` set, only packings keeping every Delta^j
    with ``j <= level`` are produced.
    """
    entries = B.entries
    for i, (_, p1) in enumerate(entries):
        for _, p2 in entries[i + 1:]:
            if p1.value == p2.value:
                continue
            if level is not None and not preserves_levels(p1, p2, level):
                continue
            rest = B - Basket([(1, p1), (1, p2)])
            yield p1, p2, rest + Basket([(1, p1 + p2)])


def is_minimal_positive(F: FormalBasket, level: Optional[int] = 12) -> bool:
    """Positive, and no admissible packing keeps K^3 positive.

    Admissible packings keep Delta^j for ``j <= level`` (so the level-12
    class is unchanged); ``level=None`` allows every packing of two
    different fractions.
    """
    if k_cubed(F) <= 0:
        return False
    for _, _, child in distinct_packings(F.basket, level):
        if k_cubed(F.with_basket(child)) > 0:
            return False
    return True


# -- plurigenus profiles ------------------------------------------------------

# Delta^n = a*chi - c*P3 - P_n + P_{n+1}, written out as the table of
# (a, c) pairs for n = 3..12.  Delta^3 folds its -P_3 into c.
DELTA_FORMS: Dict[int, Tuple[int, int]] = {
    3: (5, 3),
    4: (14, 6),
    5: (27, 10),
    6: (44, 15),
    7: (65, 21),
    8: (90, 28),
    9: (119, 36),
    10: (152, 45),
    11: (189, 55),
    12: (230, 66),
}


@dataclass(frozen=True)
class PluriProfile:
    chi: int
    P: Mapping[int, int]
    eta: int = 0
    zeta: int = 0
    alpha: int = 0
    beta: int = 0
    case: str = "i"

    def __post_init__(self):
        if self.case not in CASES:
            raise ValueError(f"case must be one of {CASES}, got {self.case!r}")
        P = {m: 0 for m in range(2, 14)}
        P.update(self.P)
        object.__setattr__(self, "P", P)

    @classmethod
    def from_values(cls, chi: int, p3_to_p11, p13: int = 0, case: str = "i", **counts) -> "PluriProfile":
        vals = list(p3_to_p11)
        if len(vals) != 9:
            raise ValueError(f"expected 9 values P3..P11, got {len(vals)}")
        P = {m: v for m, v in zip(range(3, 12), vals)}
        P[2], P[12], P[13] = 0, 2, p13
        return cls(chi, P, case=case, **counts)

    def __getitem__(self, m: int) -> int:
        return self.P[m]

    @property
    def p_tuple(self) -> Tuple[int, ...]:
        return tuple(self.P[m] for m in range(3, 12))

    @property
    def sigma(self) -> int:
        return 10 * self.chi - self.P[3]

    @property
    def tau(self) -> int:
        return 4 * self.chi - self.P[3]

    @property
    def epsilon(self) -> int:
        P = self.P
        return -P[3] + P[4] + P[5] + P[6] - P[7]

    @property
    def n15(self) -> int:
        return self.epsilon if self.case == "i" else 0

    @property
    def n16(self) -> int:
        return 0 if self.case == "i" else 1

    @property
    def R(self) -> int:
        return 2 * self.n15 + 5 * self.n16

    def regime_violations(self) -> list:
        """Reasons the profile lies outside the delta = 12, P_12 = 2 regime."""
        P = self.P
        bad = []
        if P[2] != 0:
            bad.append("P2 != 0")
        bad += [f"P{m} > 1" for m in range(3, 12) if P[m] > 1]
        bad += [f"P{m} < 0" for m in range(2, 14) if P[m] < 0]
        if P[12] != 2:
            bad.append("P12 != 2")
        if self.chi < 2:
            bad.append("chi < 2")
        if min(self.eta, self.zeta, self.alpha, self.beta) < 0:
            bad.append("negative packing count")
        return bad


def delta_from_profile(p: PluriProfile, n: int) -> int:
    a, c = DELTA_FORMS[n]
    P = p.P
    return a * p.chi - c * P[3] - P[n] + P[n + 1]


def solve_b0(p: PluriProfile) -> Basket:
    """Level-0 basket: counts of (1,2), (1,3), (1,4), (1,5), (1,6)."""
    d3 = delta_from_profile(p, 3)
    d4 = delta_from_profile(p, 4)
    n12 = d3
    n13 = d4 - 2 * d3
    n15, n16 = p.n15, p.n16
    n14 = p.sigma - n12 - n13 - n15 - n16
    counts = {"n0_1_2": n12, "n0_1_3": n13, "n0_1_4": n14, "n0_1_5": n15, "n0_1_6": n16}
    for name, v in counts.items():
        if v < 0:
            raise InfeasibleProfile(name, v)
    return Basket([(n12, (1, 2)), (n13, (1, 3)), (n14, (1, 4)), (n15, (1, 5)), (n16, (1, 6))])
