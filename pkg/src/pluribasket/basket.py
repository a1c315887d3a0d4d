"""Baskets of 3-fold terminal quotient singularities.

A singularity of type 1/r(1, -1, b) is written as the pair ``(b, r)``.  A
basket is a finite weighted multiset of such pairs.  Everything here is exact:
rational quantities are :class:`fractions.Fraction`, never floats.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Mapping, Tuple, Union

__all__ = [
    "BasketError",
    "InvalidPair",
    "NotTerminal",
    "PairNotPresent",
    "DomainError",
    "BasketParseError",
    "Pair",
    "Basket",
    "make_pair",
    "sigma",
    "sigma_prime",
    "delta_n",
    "delta_n_basket",
    "pack",
    "is_prime_packing",
    "sigma_prime_drop",
    "parse_basket",
    "format_basket",
]


class BasketError(ValueError):
    """Base class for basket errors."""


class InvalidPair(BasketError):
    pass


class NotTerminal(BasketError):
    pass


class PairNotPresent(BasketError):
    pass


class DomainError(BasketError):
    """Raised when a formula is asked to leave the range b/r <= 1/2."""


class BasketParseError(BasketError):
    def __init__(self, lineno: int, line: str, reason: str):
        super().__init__(f"line {lineno}: {reason}: {line.strip()!r}")
        self.lineno = lineno
        self.line = line
        self.reason = reason


@dataclass(frozen=True)
class Pair:
    """A (possibly generalized) singularity type ``(b, r)`` with ``0 < b < r``."""

    b: int
    r: int

    def __post_init__(self):
        if not (isinstance(self.b, int) and isinstance(self.r, int)):
            raise InvalidPair(f"pair entries must be integers, got ({self.b!r}, {self.r!r})")
        if self.b <= 0 or self.r <= 0 or self.b >= self.r:
            raise InvalidPair(f"need 0 < b < r, got ({self.b}, {self.r})")

    @property
    def value(self) -> Fraction:
        return Fraction(self.b, self.r)

    @property
    def is_reduced(self) -> bool:
        return gcd(self.b, self.r) == 1

    @property
    def is_terminal(self) -> bool:
        return self.is_reduced and 2 * self.b <= self.r

    def reduced(self) -> Tuple[int, "Pair"]:
        """Split ``(kb, kr)`` into ``k`` and the coprime pair ``(b, r)``."""
        g = gcd(self.b, self.r)
        if g == 1:
            return 1, self
        return g, Pair(self.b // g, self.r // g)

    def __add__(self, other: "Pair") -> "Pair":
        return Pair(self.b + other.b, self.r + other.r)

    def __str__(self) -> str:
        return f"({self.b},{self.r})"


PairLike = Union[Pair, Tuple[int, int]]


def _as_pair(p: PairLike) -> Pair:
    return p if isinstance(p, Pair) else Pair(*p)


def make_pair(b: int, r: int, kind: str = "terminal") -> Pair:
    """Validate and build a pair.

    ``kind="terminal"`` additionally requires ``gcd(b, r) == 1`` and
    ``2b <= r``; it does not swap ``b`` for ``r - b`` on the caller's behalf.
    """
    if kind not in ("terminal", "generalized"):
        raise ValueError(f"unknown pair kind {kind!r}")
    p = Pair(b, r)
    if kind == "terminal":
        if gcd(b, r) != 1:
            raise NotTerminal(f"gcd({b}, {r}) = {gcd(b, r)} != 1")
        if 2 * b > r:
            raise NotTerminal(f"({b}, {r}) has b > r/2")
    return p


def _sort_key(p: Pair):
    return (-p.value, p.r)


class Basket:
    """Immutable weighted multiset of pairs kept in canonical form.

    Entries are sorted by ``b/r`` descending, then ``r`` ascending; equal pairs
    are merged.  Equality and hashing go through the canonical form.
    """

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries: Union[Iterable, Mapping, None] = None):
        counts: dict[Pair, int] = {}
        if entries is None:
            entries = ()
        elif isinstance(entries, Mapping):
            entries = [(w, p) for p, w in entries.items()]
        for item in entries:
            if isinstance(item, Pair):
                w, p = 1, item
            else:
                w, p = item
                p = _as_pair(p)
            if not isinstance(w, int) or w < 0:
                raise BasketError(f"weights must be non-negative integers, got {w!r}")
            if w:
                counts[p] = counts.get(p, 0) + w
        self._entries: Tuple[Tuple[int, Pair], ...] = tuple(
            (counts[p], p) for p in sorted(counts, key=_sort_key)
        )
        self._hash = hash(self._entries)

    @classmethod
    def of(cls, *items) -> "Basket":
        """``Basket.of((1, 2), (3, (1, 3)))`` - bare tuples weigh 1."""
        out = []
        for it in items:
            if isinstance(it, Pair):
                out.append((1, it))
            elif len(it) == 2 and isinstance(it[1], (tuple, Pair)):
                out.append((it[0], _as_pair(it[1])))
            else:
                out.append((1, _as_pair(it)))
        return cls(out)

    @property
    def entries(self) -> Tuple[Tuple[int, Pair], ...]:
        return self._entries

    def pairs(self) -> Tuple[Pair, ...]:
        return tuple(p for _, p in self._entries)

    def weight(self, p: PairLike) -> int:
        p = _as_pair(p)
        for w, q in self._entries:
            if q == p:
                return w
        return 0

    def elements(self) -> Iterator[Pair]:
        """Each element copy, in canonical order."""
        for w, p in self._entries:
            for _ in range(w):
                yield p

    def size(self) -> int:
        return sum(w for w, _ in self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[Tuple[int, Pair]]:
        return iter(self._entries)

    def __contains__(self, p) -> bool:
        return self.weight(p) > 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Basket):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: "Basket") -> "Basket":
        return Basket(list(self._entries) + list(other._entries))

    def __sub__(self, other: "Basket") -> "Basket":
        counts = {p: w for w, p in self._entries}
        for w, p in other._entries:
            have = counts.get(p, 0)
            if have < w:
                raise PairNotPresent(f"{p} occurs {have} times, cannot remove {w}")
            counts[p] = have - w
        return Basket([(w, p) for p, w in counts.items()])

    def scaled(self, k: int) -> "Basket":
        return Basket([(k * w, p) for w, p in self._entries])

    def reduced(self) -> "Basket":
        """Replace every ``(kb, kr)`` by ``k x (b, r)``.

        Both forms have the same sigma, sigma' and Delta^n for every n.
        """
        out = []
        for w, p in self._entries:
            k, q = p.reduced()
            out.append((w * k, q))
        return Basket(out)

    def __repr__(self) -> str:
        return f"Basket({format_basket(self, sep=', ')!s})" if self._entries else "Basket({})"

    def __str__(self) -> str:
        return "{" + format_basket(self, sep=", ") + "}"


def sigma(B: Basket) -> int:
    return sum(w * p.b for w, p in B)


def sigma_prime(B: Basket) -> Fraction:
    return sum((Fraction(w * p.b * p.b, p.r) for w, p in B), Fraction(0))


def delta_n(p: PairLike, n: int) -> int:
    """Delta^n(b, r) = d*b*n - r*d*(d+1)/2 with d = floor(b*n/r)."""
    p = _as_pair(p)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if 2 * p.b > p.r:
        raise DomainError(f"Delta^n is only defined for b/r <= 1/2, got {p}")
    d = (p.b * n) // p.r
    return d * p.b * n - p.r * d * (d + 1) // 2


def delta_n_basket(B: Basket, n: int) -> int:
    return sum(w * delta_n(p, n) for w, p in B)


def pack(B: Basket, p1: PairLike, p2: PairLike) -> Basket:
    """Replace one copy each of ``p1`` and ``p2`` by ``p1 + p2``."""
    p1, p2 = _as_pair(p1), _as_pair(p2)
    need = Basket([(1, p1), (1, p2)])
    try:
        rest = B - need
    except PairNotPresent:
        raise PairNotPresent(f"cannot pack {p1} and {p2}: not both present in {B}") from None
    return rest + Basket([(1, p1 + p2)])


def _det(p1: Pair, p2: Pair) -> int:
    return p1.b * p2.r - p2.b * p1.r


def is_prime_packing(p1: PairLike, p2: PairLike) -> bool:
    p1, p2 = _as_pair(p1), _as_pair(p2)
    return abs(_det(p1, p2)) == 1


def sigma_prime_drop(p1: PairLike, p2: PairLike) -> Fraction:
    """sigma'(B) - sigma'(B') for the packing of ``p1`` with ``p2``."""
    p1, p2 = _as_pair(p1), _as_pair(p2)
    d = p1.r * p2.b - p2.r * p1.b
    return Fraction(d * d, p1.r * p2.r * (p1.r + p2.r))


# -- text format ------------------------------------------------------------

_LINE_RE = re.compile(r"^\s*(?:(\d+)\s*[x×*]\s*)?\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$")


def parse_basket(text: str, kind: str = "generalized") -> Basket:
    """Parse the line-oriented basket format (``9 x (1,2)`` per line)."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = _LINE_RE.match(line)
        if not m:
            raise BasketParseError(lineno, raw, "expected 'w x (b,r)' or '(b,r)'")
        w = int(m.group(1)) if m.group(1) is not None else 1
        if w <= 0:
            raise BasketParseError(lineno, raw, "weight must be positive")
        try:
            p = make_pair(int(m.group(2)), int(m.group(3)), kind)
        except BasketError as exc:
            raise BasketParseError(lineno, raw, str(exc)) from None
        entries.append((w, p))
    return Basket(entries)


def format_basket(B: Basket, sep: str = "\n") -> str:
    parts = [str(p) if w == 1 else f"{w} x {p}" for w, p in B]
    return sep.join(parts)
