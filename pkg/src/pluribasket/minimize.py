"""Minimal positive formal baskets below a level-12 class.

Search runs on reduced baskets: ``(kb, kr)`` and ``k x (b, r)`` share every
invariant, so a packing of two copies of one fraction is a no-op and is not
a move.  Moves are packings of two different fractions lying in one closed
cell of S(12); exactly these keep Delta^j for j <= 12, so every descendant
still unpacks to the class basket at level 12.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .basket import Basket, Pair, delta_n_basket
from .formal import FormalBasket, chi_sequence, distinct_packings, k_cubed, preserves_levels
from .levels import in_level, neighbors

__all__ = [
    "SearchInvariantError",
    "Descendant",
    "all_packings",
    "minimal_positive_descendants",
    "brute_force_minimal",
    "global_minimum",
    "trace_groups",
    "render_trace",
    "parse_trace",
    "apply_trace",
]

LEVEL = 12
SUCC = "≻"


class SearchInvariantError(AssertionError):
    pass


@dataclass(frozen=True)
class Descendant:
    basket: Basket
    k3: Fraction
    trace: str


def all_packings(B: Basket) -> List[Tuple[Pair, Pair, Basket]]:
    """Every single packing of two element copies, doubled entries included."""
    out = []
    entries = B.entries
    for i, (w1, p1) in enumerate(entries):
        if w1 >= 2:
            out.append((p1, p1, (B - Basket([(2, p1)])) + Basket([(1, p1 + p1)])))
        for _, p2 in entries[i + 1:]:
            out.append((p1, p2, (B - Basket([(1, p1), (1, p2)])) + Basket([(1, p1 + p2)])))
    return out


# -- traces -------------------------------------------------------------------

Group = Tuple[Tuple[Tuple[int, Pair], ...], Tuple[int, Pair]]


def trace_groups(B: Basket, level: int = LEVEL) -> List[Group]:
    """Group each packed element of ``B`` with the level-``level`` elements it came from."""
    groups = []
    for w, p in B.reduced():
        if in_level(p.value, level):
            continue
        hi, lo = neighbors(p, level)
        a = p.b * lo.r - p.r * lo.b
        c = p.r * hi.b - p.b * hi.r
        groups.append((((w * a, hi), (w * c, lo)), (w, p)))
    return groups


def _term(k: int, p: Pair) -> str:
    return f"{k}{p}" if k != 1 else str(p)


def render_trace(groups: Sequence[Group]) -> str:
    parts = []
    for lhs, (k, p) in groups:
        parts.append(",".join(_term(w, q) for w, q in lhs) + f" {SUCC} " + _term(k, p))
    return "; ".join(parts)


_ITEM_RE = re.compile(r"(\d*)\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)|(≻|>|\\succ)")


def parse_trace(text: str) -> List[Group]:
    """Read ``"(4,9),(3,7) ≻ (7,16); 2(2,5),2(3,8) ≻ 2(5,13)"``.

    Separators between groups are ignored: every relation sign is followed
    by exactly one result term, and the next group starts right after it.
    """
    groups = []
    lhs: List[Tuple[int, Pair]] = []
    expect_rhs = False
    for m in _ITEM_RE.finditer(text):
        if m.group(4):
            if expect_rhs or not lhs:
                raise ValueError(f"misplaced relation sign in {text!r}")
            expect_rhs = True
            continue
        term = (int(m.group(1) or 1), Pair(int(m.group(2)), int(m.group(3))))
        if expect_rhs:
            groups.append((tuple(lhs), term))
            lhs, expect_rhs = [], False
        else:
            lhs.append(term)
    if lhs or expect_rhs:
        raise ValueError(f"incomplete trace {text!r}")
    return groups


def apply_trace(B: Basket, groups: Iterable[Group]) -> Basket:
    """Carry out the packings of a trace on ``B`` and reduce the result."""
    out = B.reduced()
    for lhs, (k, p) in groups:
        b = sum(w * q.b for w, q in lhs)
        r = sum(w * q.r for w, q in lhs)
        if (b, r) != (k * p.b, k * p.r):
            raise ValueError(f"{render_trace([(lhs, (k, p))])} does not add up")
        out = out - Basket(lhs).reduced() + Basket([(k, p)]).reduced()
    return out


# -- search -------------------------------------------------------------------


def _children(B: Basket, level: int):
    for _, _, child in distinct_packings(B, level):
        yield child.reduced()


def minimal_positive_descendants(
    F: FormalBasket,
    level: int = LEVEL,
    memo: bool = True,
    check: bool = True,
) -> List[Descendant]:
    """All minimal positive formal baskets reachable from ``F`` by moves.

    Sorted by volume, then by basket text.  With ``check`` set, every step
    asserts that K^3 drops and every emitted basket keeps Delta^j (j <= level)
    and chi_m (m <= level + 1).
    """
    root = F.basket.reduced()
    if k_cubed(F.with_basket(root)) <= 0:
        return []
    ref_delta = [delta_n_basket(root, j) for j in range(2, level + 1)]
    ref_chi = chi_sequence(F.with_basket(root), level + 1)
    seen: Set[Basket] = set()
    found: Dict[Basket, Fraction] = {}

    def visit(B: Basket, k3: Fraction):
        if memo:
            if B in seen:
                return
            seen.add(B)
        minimal = True
        for child in _children(B, level):
            ck3 = k_cubed(F.with_basket(child))
            if check and ck3 >= k3:
                raise SearchInvariantError(f"K^3 did not drop: {B} -> {child}")
            if ck3 > 0:
                minimal = False
                visit(child, ck3)
        if minimal:
            if check:
                if [delta_n_basket(B, j) for j in range(2, level + 1)] != ref_delta:
                    raise SearchInvariantError(f"Delta changed along the search at {B}")
                if chi_sequence(F.with_basket(B), level + 1) != ref_chi:
                    raise SearchInvariantError(f"chi_m changed along the search at {B}")
            found[B] = k3

    visit(root, k_cubed(F.with_basket(root)))
    out = [Descendant(B, k3, render_trace(trace_groups(B, level))) for B, k3 in found.items()]
    out.sort(key=lambda d: (d.k3, str(d.basket)))
    return out


def brute_force_minimal(F: FormalBasket, level: int = LEVEL) -> Set[Basket]:
    """Exhaustive oracle: walk every packing sequence on plain element lists.

    No memo, no weighted entries.  Only meant for baskets with a handful of
    elements.
    """
    def split(p: Pair) -> List[Pair]:
        k, q = p.reduced()
        return [q] * k

    def k3_of(elems) -> Fraction:
        return k_cubed(F.with_basket(Basket(elems)))

    found: Set[Basket] = set()

    def walk(elems: Tuple[Pair, ...]):
        minimal = True
        for i, j in combinations(range(len(elems)), 2):
            p, q = elems[i], elems[j]
            if p.value == q.value or not preserves_levels(p, q, level):
                continue
            rest = [e for n, e in enumerate(elems) if n not in (i, j)]
            child = tuple(sorted(rest + split(p + q), key=lambda e: (-e.value, e.r)))
            if k3_of(child) > 0:
                minimal = False
                walk(child)
        if minimal:
            found.add(Basket(elems))

    start = tuple(q for p in F.basket.elements() for q in split(p))
    if k3_of(start) > 0:
        walk(start)
    return found


def global_minimum(results: Iterable[Tuple[object, Sequence[Descendant]]]):
    """``(min K^3, [(owner, descendant), ...])`` over all attaining descendants."""
    best: Optional[Fraction] = None
    witnesses = []
    for owner, descendants in results:
        for d in descendants:
            if best is None or d.k3 < best:
                best, witnesses = d.k3, [(owner, d)]
            elif d.k3 == best:
                witnesses.append((owner, d))
    return best, witnesses
