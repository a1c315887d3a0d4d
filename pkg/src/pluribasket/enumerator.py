"""Exhaustive enumeration of level-12 baskets with delta = 12 and P_12 = 2.

The grid is chi x (P3..P11 in {0,1}) x P13 x (eta, zeta, alpha, beta).  For
each fixed (chi, P3..P11) every tabulated linear form is compiled to a
constant plus integer coefficients on the free parameters, so the inner loops
only add small integers and can reject a branch as soon as every parameter a
form depends on has been fixed.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .basket import Basket, Pair, delta_n, delta_n_basket
from .formal import (
    DELTA_FORMS,
    FormalBasket,
    InfeasibleProfile,
    PluriProfile,
    chi_sequence,
    delta_from_profile,
    k_cubed,
    solve_b0,
)
from .levels import epsilon_n, in_level, neighbors, unpack_to_level
from .linear import LinearForm
from .tables import EPSILONS, LEVELS, SLOTS, Slot

__all__ = [
    "FILTERS",
    "CoeffVector",
    "ClassRecord",
    "Bounds",
    "coefficients",
    "epsilons",
    "bounds",
    "enumerate_classes",
    "validate_class",
    "validate_forms",
]

FILTERS = ("nonnegative", "epsilon", "regime", "product-rule", "delta-consistency", "positive-volume")

FREE = ("P13", "eta", "zeta", "alpha", "beta")

CHI_RANGE = {"i": range(2, 6), "ii": range(2, 4)}


@dataclass(frozen=True)
class CoeffVector:
    level: int
    case: str
    counts: Tuple[int, ...]

    @property
    def slots(self) -> Tuple[Slot, ...]:
        return tuple(LEVELS[self.case][self.level])

    def as_dict(self) -> Dict[Slot, int]:
        return dict(zip(self.slots, self.counts))

    def basket(self) -> Basket:
        return Basket([(n, s) for s, n in zip(self.slots, self.counts)])


@dataclass
class ClassRecord:
    case: str
    profile: PluriProfile
    b12: CoeffVector
    k3: Fraction
    witnesses: List[Tuple[int, ...]] = field(default_factory=list)
    row: int = 0
    ref: Optional[int] = None

    @property
    def key(self):
        p = self.profile
        return (p.chi, p.p_tuple, self.b12.counts)

    @property
    def basket(self) -> Basket:
        return self.b12.basket()

    @property
    def formal(self) -> FormalBasket:
        return FormalBasket(self.basket, self.profile.chi, 0)

    @property
    def label(self) -> str:
        if self.ref is not None:
            return f"{self.case}:{self.ref}"
        return f"{self.case}:#{self.row}"


def _values(p: PluriProfile) -> Dict[str, int]:
    v = {"chi": p.chi, "eta": p.eta, "zeta": p.zeta, "alpha": p.alpha, "beta": p.beta}
    v.update({f"P{m}": p.P[m] for m in range(2, 14)})
    return v


def coefficients(p: PluriProfile) -> Dict[int, CoeffVector]:
    """Every tabulated level of the case, evaluated at ``p``.

    Raises :class:`InfeasibleProfile` naming the first negative count or
    epsilon, checking B0 first and then levels in increasing order.
    """
    vals = _values(p)
    solve_b0(p)
    eps = EPSILONS[p.case]
    out = {}
    for level, table in LEVELS[p.case].items():
        if level in eps:
            e = eps[level](vals)
            if e < 0:
                raise InfeasibleProfile(f"eps{level}", e)
        counts = []
        for (b, r), form in table.items():
            n = form(vals)
            if n < 0:
                raise InfeasibleProfile(f"n{level}_({b},{r})", n)
            counts.append(n)
        out[level] = CoeffVector(level, p.case, tuple(counts))
    for n, form in eps.items():
        if n not in LEVELS[p.case] and form(vals) < 0:
            raise InfeasibleProfile(f"eps{n}", form(vals))
    return out


def epsilons(p: PluriProfile) -> Dict[int, int]:
    vals = _values(p)
    return {n: f(vals) for n, f in EPSILONS[p.case].items()}


# -- bounds -------------------------------------------------------------------


@dataclass(frozen=True)
class Bounds:
    p13: range
    eta: range
    zeta: range
    beta: range

    def alpha(self, eta: int, zeta: int, case: str) -> range:
        return range(0, zeta + 1) if case == "i" else range(0, 4 + eta)


def bounds(case: str, chi: int, P: Dict[int, int]) -> Optional[Bounds]:
    """Finite ranges for the free parameters, or None when empty."""
    if chi not in CHI_RANGE[case]:
        return None
    if case == "i":
        top = -chi - 2 * P[3] - 2 * P[4] + P[6] + P[7] + P[8] + P[10] - P[11] + 2
        p13 = range(0, min(top, 6 - chi) + 1)
        b = Bounds(p13, range(0, chi + 5), range(0, chi + 5), range(0, 4))
    else:
        b = Bounds(range(0, 5 - chi), range(0, chi + 3), range(0, 1), range(0, 3))
    return b if len(b.p13) else None


# -- compiled constraints -----------------------------------------------------


def _compile(form: LinearForm, fixed: Dict[str, int]) -> Tuple[int, Tuple[int, ...]]:
    const = sum(c * (fixed[k] if k else 1) for k, c in form.items() if k not in FREE)
    return const, tuple(form.get(k, 0) for k in FREE)


def _constraints(case: str, fixed: Dict[str, int], filters: FrozenSet[str]):
    """Group compiled ``const + coef . free >= 0`` checks by the last free
    parameter they involve (-1 means none)."""
    forms = []
    if "nonnegative" in filters:
        for level, table in LEVELS[case].items():
            for (b, r), f in table.items():
                forms.append((f"n{level}_({b},{r})", f))
    if "epsilon" in filters:
        for n, f in EPSILONS[case].items():
            forms.append((f"eps{n}", f))
    groups: Dict[int, list] = {i: [] for i in range(-1, len(FREE))}
    for name, f in forms:
        const, coef = _compile(f, fixed)
        last = max((i for i, c in enumerate(coef) if c), default=-1)
        groups[last].append((const, coef))
    return groups


def _ok(group, x) -> bool:
    for const, coef in group:
        if const + coef[0] * x[0] + coef[1] * x[1] + coef[2] * x[2] + coef[3] * x[3] + coef[4] * x[4] < 0:
            return False
    return True


def _product_rule(P: Dict[int, int], upto: int) -> bool:
    for a in range(2, upto):
        for b in range(a, upto - a + 1):
            if P[a + b] < P[a] * P[b]:
                return False
    return True


def _profiles(case: str, filters: FrozenSet[str]):
    for chi in CHI_RANGE[case]:
        for ps in itertools.product((0, 1), repeat=9):
            P = {2: 0, 12: 2, 13: 0}
            P.update(zip(range(3, 12), ps))
            if "product-rule" in filters and not _product_rule(P, 12):
                continue
            base = PluriProfile(chi, P, case=case)
            if "epsilon" in filters and case == "i" and base.epsilon < 0:
                continue
            if "delta-consistency" in filters and case == "ii" and base.epsilon != 2:
                # Delta^6 of the case-(ii) level-12 form exceeds the profile by eps - 2
                continue
            yield chi, P


def _search_profile(case: str, chi: int, P: Dict[int, int], filters: FrozenSet[str]):
    b = bounds(case, chi, P)
    if b is None:
        return []
    fixed = {"chi": chi}
    fixed.update({f"P{m}": P[m] for m in range(2, 13)})
    groups = _constraints(case, fixed, filters)
    if not _ok(groups[-1], (0, 0, 0, 0, 0)):
        return []
    if "nonnegative" in filters:
        try:
            solve_b0(PluriProfile(chi, P, case=case))
        except InfeasibleProfile:
            return []
    found = []
    for p13 in b.p13:
        if "product-rule" in filters:
            PP = dict(P)
            PP[13] = p13
            if not _product_rule(PP, 13):
                continue
        x = [p13, 0, 0, 0, 0]
        if not _ok(groups[0], x):
            continue
        for eta in b.eta:
            x[1] = eta
            if not _ok(groups[1], x):
                continue
            for zeta in b.zeta:
                x[2] = zeta
                if not _ok(groups[2], x):
                    continue
                for alpha in b.alpha(eta, zeta, case):
                    x[3] = alpha
                    if not _ok(groups[3], x):
                        continue
                    for beta in b.beta:
                        x[4] = beta
                        if _ok(groups[4], x):
                            found.append(tuple(x))
    records = []
    for x in found:
        PP = dict(P)
        PP[13] = x[0]
        prof = PluriProfile(chi, PP, eta=x[1], zeta=x[2], alpha=x[3], beta=x[4], case=case)
        rec = _make_record(prof, filters)
        if rec is not None:
            records.append(rec)
    return records


def _make_record(prof: PluriProfile, filters: FrozenSet[str]) -> Optional[ClassRecord]:
    if "regime" in filters and prof.regime_violations():
        return None
    vals = _values(prof)
    table = LEVELS[prof.case][12]
    counts = tuple(f(vals) for f in table.values())
    if "nonnegative" in filters and min(counts) < 0:
        return None
    # weighted sums so that negative counts still work with nonnegativity off
    pairs = [(n, Pair(*s)) for s, n in zip(table, counts)]
    if "delta-consistency" in filters:
        for j in range(3, 13):
            if sum(n * delta_n(p, j) for n, p in pairs) != delta_from_profile(prof, j):
                return None
    sig = sum(n * p.b for n, p in pairs)
    sig_prime = sum((Fraction(n * p.b * p.b, p.r) for n, p in pairs), Fraction(0))
    k3 = -sig + sig_prime + 6 * prof.chi
    if "positive-volume" in filters and k3 <= 0:
        return None
    b12 = CoeffVector(12, prof.case, counts)
    return ClassRecord(prof.case, prof, b12, k3, [(prof[13], prof.eta, prof.zeta, prof.alpha, prof.beta)])


def _shard(args):
    case, chi, P, filters = args
    return _search_profile(case, chi, P, filters)


def enumerate_classes(
    case: str,
    disabled: Iterable[str] = (),
    jobs: int = 1,
) -> List[ClassRecord]:
    """All level-12 classes of the case, deduplicated and sorted.

    ``disabled`` names filters from :data:`FILTERS` to switch off.  The
    output does not depend on ``jobs``.
    """
    disabled = frozenset(disabled)
    unknown = disabled - set(FILTERS)
    if unknown:
        raise ValueError(f"unknown filter(s): {', '.join(sorted(unknown))}")
    filters = frozenset(FILTERS) - disabled
    tasks = [(case, chi, P, filters) for chi, P in _profiles(case, filters)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_shard, tasks, chunksize=16))
    else:
        results = [_shard(t) for t in tasks]
    merged: Dict[tuple, ClassRecord] = {}
    for recs in results:
        for rec in recs:
            have = merged.get(rec.key)
            if have is None:
                merged[rec.key] = rec
            else:
                if have.k3 != rec.k3:
                    raise AssertionError(f"same class {rec.key} with two volumes")
                have.witnesses.extend(rec.witnesses)
    out = sorted(merged.values(), key=lambda r: r.key)
    for i, rec in enumerate(out, start=1):
        rec.row = i
        rec.witnesses.sort()
    return out


# -- oracles ------------------------------------------------------------------


@dataclass
class Diagnostics:
    label: str
    mismatches: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def validate_class(rec: ClassRecord) -> Diagnostics:
    """Compare every tabulated level and epsilon with the unpacking operator."""
    diag = Diagnostics(rec.label)
    prof = rec.profile
    B12 = rec.basket
    try:
        closed = coefficients(prof)
    except InfeasibleProfile as exc:
        diag.mismatches.append(f"closed form infeasible: {exc}")
        return diag
    if closed[12].counts != rec.b12.counts:
        diag.mismatches.append(f"level 12: record {rec.b12.counts} vs closed form {closed[12].counts}")
    for level, vec in closed.items():
        operator = unpack_to_level(B12, level)
        if operator != vec.basket():
            diag.mismatches.append(f"level {level}: closed form {vec.basket()} vs unpacked {operator}")
    b0 = solve_b0(prof)
    if unpack_to_level(B12, 0) != b0:
        diag.mismatches.append(f"level 0: solved {b0} vs unpacked {unpack_to_level(B12, 0)}")
    for n, e in epsilons(prof).items():
        got = epsilon_n(B12, n)
        if got != e:
            diag.mismatches.append(f"eps{n}: closed form {e} vs Delta difference {got}")
    for j in range(3, 13):
        if delta_n_basket(B12, j) != delta_from_profile(prof, j):
            diag.mismatches.append(f"Delta^{j} differs from the profile")
    chis = chi_sequence(rec.formal, 13)
    for m in range(3, 14):
        if chis[m] != prof[m]:
            diag.mismatches.append(f"chi_{m} = {chis[m]} but P{m} = {prof[m]}")
    return diag


def _symbolic_delta(table: Dict[Slot, LinearForm], j: int) -> LinearForm:
    total = LinearForm()
    for (b, r), form in table.items():
        d = (b * j) // r
        total = total + form * (d * b * j - r * d * (d + 1) // 2)
    return total


def _symbolic_profile_delta(j: int) -> LinearForm:
    a, c = DELTA_FORMS[j]
    return LinearForm({"chi": a, "P3": -c}) + {f"P{j}": -1} + {f"P{j + 1}": 1}


_EPS = LinearForm.parse("-P3 + P4 + P5 + P6 - P7")


def _symbolic_levels(case: str) -> Dict[int, Dict[Slot, LinearForm]]:
    levels = dict(LEVELS[case])
    if 0 not in levels:
        d3, d4 = _symbolic_profile_delta(3), _symbolic_profile_delta(4)
        sigma = LinearForm.parse("10chi - P3")
        levels[0] = {
            (1, 2): d3,
            (1, 3): d4 - d3 * 2,
            (1, 4): sigma - d4 + d3 - _EPS,
            (1, 5): _EPS,
        }
    return dict(sorted(levels.items()))


def _unpack_symbolic(table: Dict[Slot, LinearForm], level: int) -> Dict[Slot, LinearForm]:
    out: Dict[Slot, LinearForm] = {}
    for (b, r), form in table.items():
        p = Pair(b, r)
        if in_level(p.value, level):
            out[(b, r)] = out.get((b, r), LinearForm()) + form
            continue
        up, dn = neighbors(p, level)
        for q, k in ((up, b * dn.r - r * dn.b), (dn, r * up.b - b * up.r)):
            out[(q.b, q.r)] = out.get((q.b, q.r), LinearForm()) + form * k
    return out


def validate_forms(case: str) -> List[str]:
    """Symbolic consistency of the coefficient tables, as identities.

    Each tabulated level must unpack to the one below it, Delta^j of every
    level must match the profile for j up to that level, and each epsilon
    must equal the drop of Delta^n from level n-1 to level n.  Residues are
    taken with P2 = 0 and P12 = 2; in case ii multiples of ``eps - 2`` are
    also allowed, since that case forces eps = 2.
    """
    levels = _symbolic_levels(case)

    def residue(form: LinearForm) -> LinearForm:
        f = LinearForm(form)
        f.pop("P2", None)
        f[""] = f.get("", 0) + 2 * f.pop("P12", 0)
        f = f.normalized()
        if case == "ii" and f:
            k = f.get("P4", 0)
            if (f - (_EPS - {"": 2}) * k).normalized() == {}:
                return LinearForm()
        return f

    problems = []
    order = sorted(levels, reverse=True)
    for hi, lo in zip(order, order[1:]):
        got = _unpack_symbolic(levels[hi], lo)
        for slot in sorted(set(got) | set(levels[lo])):
            diff = residue(got.get(slot, LinearForm()) - levels[lo].get(slot, LinearForm()))
            if diff:
                problems.append(f"level {hi} -> {lo}, slot {slot}: residue {diff}")
    effective = {n: (4 if n == 0 else n) for n in levels}
    for n, table in levels.items():
        for j in range(3, effective[n] + 1):
            diff = residue(_symbolic_delta(table, j) - _symbolic_profile_delta(j))
            if diff:
                problems.append(f"Delta^{j} of level {n}: residue {diff}")
    for n, printed in EPSILONS[case].items():
        above = levels[min(m for m in levels if m >= n)]
        drop = _symbolic_delta(_unpack_symbolic(above, n - 1), n) - _symbolic_delta(_unpack_symbolic(above, n), n)
        diff = residue(drop - printed)
        if diff:
            problems.append(f"eps{n}: residue {diff}")
    return problems
