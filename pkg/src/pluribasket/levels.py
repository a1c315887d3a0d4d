"""Level-n fraction sets and the canonical unpacking ``B -> B^(n)``.

The level-n set S(n) holds every reduced fraction ``b/r <= 1/2`` with
``r <= n`` together with all unit fractions ``1/r``.  Consecutive members
are Farey neighbours (determinant 1), so a fraction outside S(n) unpacks
uniquely into positive multiples of the two members bracketing it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Tuple

from .basket import Basket, BasketError, DomainError, Pair, delta_n_basket

__all__ = [
    "AlreadyAtLevel",
    "LevelSet",
    "in_level",
    "level_set",
    "neighbors",
    "unpack_to_level",
    "epsilon_n",
]

HALF = Fraction(1, 2)


class AlreadyAtLevel(BasketError):
    pass


@dataclass(frozen=True)
class LevelSet:
    n: int
    fractions: Tuple[Fraction, ...]

    def __contains__(self, x) -> bool:
        return Fraction(x) in self.fractions

    def __iter__(self):
        return iter(self.fractions)

    def __len__(self):
        return len(self.fractions)


def in_level(x: Fraction, n: int) -> bool:
    """Membership in S(n) without materializing the set."""
    x = Fraction(x)
    return 0 < x <= HALF and (x.numerator == 1 or x.denominator <= n)


@lru_cache(maxsize=None)
def level_set(n: int, max_index: int) -> LevelSet:
    """S(n) truncated to denominators ``<= max_index``, in descending order."""
    if n < 2:
        raise ValueError(f"level must be >= 2, got {n}")
    if max_index < n:
        raise ValueError(f"max_index {max_index} < level {n}")
    fr = {Fraction(1, r) for r in range(2, max_index + 1)}
    for r in range(2, n + 1):
        for b in range(1, r // 2 + 1):
            if gcd(b, r) == 1:
                fr.add(Fraction(b, r))
    ordered = tuple(sorted(fr, reverse=True))
    for hi, lo in zip(ordered, ordered[1:]):
        if hi.numerator * lo.denominator - lo.numerator * hi.denominator != 1:
            raise AssertionError(f"S({n}) members {hi} > {lo} are not Farey neighbours")
    return LevelSet(n, ordered)


def _bracket(x: Fraction, n: int) -> Tuple[Fraction, Fraction]:
    if n < 2 or x < Fraction(1, n):
        k = x.denominator // x.numerator
        return Fraction(1, k), Fraction(1, k + 1)
    upper = HALF
    lower = Fraction(1, n)
    for q in range(2, n + 1):
        # largest p/q < x and smallest p/q > x
        p_lo = -((-x.numerator * q) // x.denominator) - 1
        p_hi = (x.numerator * q) // x.denominator + 1
        if p_lo > 0:
            c = Fraction(p_lo, q)
            if c > lower:
                lower = c
        c = Fraction(p_hi, q)
        if c <= HALF and c < upper:
            upper = c
    return upper, lower


def neighbors(p: Pair, n: int) -> Tuple[Pair, Pair]:
    """The consecutive members ``hi > b/r > lo`` of S(n) around ``p``."""
    x = p.value
    if x > HALF:
        raise DomainError(f"{p} lies above 1/2")
    if in_level(x, n):
        raise AlreadyAtLevel(f"{p} is already in S({n})")
    hi, lo = _bracket(x, n)
    if hi.numerator * lo.denominator - lo.numerator * hi.denominator != 1:
        raise AssertionError(f"bracket {hi} > {x} > {lo} is not a Farey pair")
    return Pair(hi.numerator, hi.denominator), Pair(lo.numerator, lo.denominator)


def unpack_to_level(B: Basket, n: int) -> Basket:
    """Canonical unpacking of ``B`` down to level ``n``."""
    out = []
    for w, p in B:
        if in_level(p.value, n):
            out.append((w, p))
            continue
        hi, lo = neighbors(p, n)
        a = p.b * lo.r - p.r * lo.b
        c = p.r * hi.b - p.b * hi.r
        assert a > 0 and c > 0, (p, hi, lo, a, c)
        out.append((w * a, hi))
        out.append((w * c, lo))
    return Basket(out)


def epsilon_n(B: Basket, n: int) -> int:
    """Number of prime packings between levels ``n-1`` and ``n``."""
    eps = delta_n_basket(unpack_to_level(B, n - 1), n) - delta_n_basket(unpack_to_level(B, n), n)
    if eps < 0:
        raise AssertionError(f"negative epsilon_{n} = {eps} for {B}")
    return eps
