"""Golden reference tables and the comparator behind ``verify``.

The golden directory holds ``case_i.csv``, ``case_ii.csv``, ``subrows.csv``
and ``deviations.csv``.  The last one lists every known way the reference
tables deviate from exact values, so that the comparator can accept them
explicitly instead of loosening its checks.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from .enumerator import ClassRecord, enumerate_classes
from .formal import k_cubed
from .io import format_fraction
from .minimize import Descendant, apply_trace, minimal_positive_descendants, parse_trace

__all__ = [
    "GoldenMissing",
    "GoldenRow",
    "GoldenSubrow",
    "Deviation",
    "default_dir",
    "load_table",
    "load_subrows",
    "load_deviations",
    "match_rows",
    "attach_refs",
    "VerifyReport",
    "verify",
]

FILES = ("case_i.csv", "case_ii.csv", "subrows.csv", "deviations.csv")

# Largest gap accepted between an exact volume and a listed rounded print.
ROUNDING = Fraction(1, 10**6)


class GoldenMissing(FileNotFoundError):
    pass


@dataclass(frozen=True)
class GoldenRow:
    case: str
    ref: int
    chi: int
    P: Tuple[int, ...]
    counts: Tuple[int, ...]
    k3: Fraction

    def matches(self, rec: ClassRecord) -> bool:
        if rec.profile.chi != self.chi or rec.b12.counts != self.counts:
            return False
        mine = rec.profile.p_tuple
        if len(self.P) == len(mine):
            return mine == self.P
        if len(self.P) == len(mine) - 1:
            return any(mine[:i] + mine[i + 1:] == self.P for i in range(len(mine)))
        return False


@dataclass(frozen=True)
class GoldenSubrow:
    case: str
    ref: int
    label: str
    trace: str
    k3: Fraction


@dataclass(frozen=True)
class Deviation:
    case: str
    ref: int
    label: str
    kind: str
    printed: str
    exact: str
    note: str


def default_dir() -> Path:
    return Path(str(resources.files("pluribasket") / "data"))


def _open(directory: Path, name: str):
    path = Path(directory) / name
    if not path.is_file():
        raise GoldenMissing(f"golden file {path} not found")
    return open(path, newline="", encoding="utf-8")


def load_table(case: str, directory: Optional[Path] = None) -> List[GoldenRow]:
    directory = Path(directory or default_dir())
    with _open(directory, f"case_{case}.csv") as fh:
        reader = csv.DictReader(fh)
        slot_cols = reader.fieldnames[3:-1]
        rows = []
        for r in reader:
            rows.append(GoldenRow(
                case,
                int(r["ref"]),
                int(r["chi"]),
                tuple(int(x) for x in r["P"].split()),
                tuple(int(r[c]) for c in slot_cols),
                Fraction(r["k3"]),
            ))
    return rows


def load_subrows(directory: Optional[Path] = None) -> List[GoldenSubrow]:
    directory = Path(directory or default_dir())
    with _open(directory, "subrows.csv") as fh:
        return [
            GoldenSubrow(r["case"], int(r["ref"]), r["label"], r["trace"], Fraction(r["k3"]))
            for r in csv.DictReader(fh)
        ]


def load_deviations(directory: Optional[Path] = None) -> List[Deviation]:
    directory = Path(directory or default_dir())
    with _open(directory, "deviations.csv") as fh:
        return [
            Deviation(r["case"], int(r["ref"]), r["label"], r["kind"], r["printed"], r["exact"], r["note"])
            for r in csv.DictReader(fh)
        ]


def match_rows(records: Sequence[ClassRecord], golden: Sequence[GoldenRow]):
    """Pair golden rows with records.

    Returns ``(matched, unmatched_golden, extra_records)`` where ``matched``
    maps ref to record.  A golden row matching several records counts as
    unmatched.
    """
    matched: Dict[int, ClassRecord] = {}
    unmatched = []
    used = set()
    for g in golden:
        cands = [r for r in records if g.matches(r)]
        if len(cands) == 1 and id(cands[0]) not in used:
            matched[g.ref] = cands[0]
            used.add(id(cands[0]))
        else:
            unmatched.append(g)
    extra = [r for r in records if id(r) not in used]
    return matched, unmatched, extra


def attach_refs(records: Sequence[ClassRecord], case: str, directory: Optional[Path] = None) -> Dict[int, ClassRecord]:
    """Set ``rec.ref`` from the golden table; returns the ref map."""
    matched, _, _ = match_rows(records, load_table(case, directory))
    for ref, rec in matched.items():
        rec.ref = ref
    return matched


# -- verify -------------------------------------------------------------------


@dataclass
class VerifyReport:
    errors: List[str] = field(default_factory=list)
    accepted: List[str] = field(default_factory=list)
    descendant_issues: List[str] = field(default_factory=list)
    summary: List[str] = field(default_factory=list)

    def exit_code(self, strict: bool = False) -> int:
        if self.errors or (strict and self.descendant_issues):
            return 1
        return 0

    def lines(self) -> List[str]:
        out = list(self.summary)
        out += [f"ERROR {e}" for e in self.errors]
        out += [f"accepted {a}" for a in self.accepted]
        out += [f"descendants {d}" for d in self.descendant_issues]
        return out


def _check_volume(report: VerifyReport, where: str, exact: Fraction, printed: Fraction, devs: Dict, key) -> None:
    if exact == printed:
        return
    dev = devs.get(key)
    if dev is not None and dev.kind == "rounded-volume" and Fraction(dev.exact) == exact \
            and Fraction(dev.printed) == printed and abs(exact - printed) < ROUNDING:
        report.accepted.append(f"{where}: printed K^3 {format_fraction(printed)} is rounded, exact {format_fraction(exact)}")
    elif dev is not None and dev.kind == "volume-mismatch" and Fraction(dev.exact) == exact:
        report.descendant_issues.append(f"{where}: printed K^3 {format_fraction(printed)}, trace gives {format_fraction(exact)} (listed)")
    else:
        report.errors.append(f"{where}: K^3 {format_fraction(exact)} != golden {format_fraction(printed)}")


def verify(
    directory: Optional[Path] = None,
    jobs: int = 1,
    descendants: bool = True,
    classes: Optional[Dict[str, List[ClassRecord]]] = None,
) -> VerifyReport:
    """Compare fresh enumerations (and descendant sets) with the goldens.

    Table rows must match exactly apart from listed deviations.  Differences
    between computed minimal positive descendants and the reference sub-rows
    are collected in ``descendant_issues``; they only fail a strict run.
    """
    directory = Path(directory or default_dir())
    for name in FILES:
        if not (directory / name).is_file():
            raise GoldenMissing(f"golden file {directory / name} not found")
    devs = {(d.case, d.ref, d.label): d for d in load_deviations(directory)}
    report = VerifyReport()
    matched_all: Dict[str, Dict[int, ClassRecord]] = {}
    for case in ("i", "ii"):
        records = classes[case] if classes else enumerate_classes(case, jobs=jobs)
        golden = load_table(case, directory)
        matched, unmatched, extra = match_rows(records, golden)
        matched_all[case] = matched
        report.summary.append(
            f"case {case}: {len(records)} classes, {len(golden)} golden rows, {len(matched)} matched"
        )
        for g in unmatched:
            report.errors.append(f"case {case} row {g.ref}: no unique matching class")
        for r in extra:
            report.errors.append(f"case {case}: extra class {r.key}")
        for g in golden:
            rec = matched.get(g.ref)
            if rec is None:
                continue
            rec.ref = g.ref
            _check_volume(report, f"case {case} row {g.ref}", rec.k3, g.k3, devs, (case, g.ref, ""))
            if len(g.P) < 9:
                report.accepted.append(
                    f"case {case} row {g.ref}: {len(g.P)} of 9 P values printed, completed as {rec.profile.p_tuple}"
                )
    if descendants:
        _verify_subrows(report, directory, matched_all, devs)
    return report


def _verify_subrows(report: VerifyReport, directory: Path, matched_all, devs) -> None:
    by_row: Dict[Tuple[str, int], List[GoldenSubrow]] = {}
    for s in load_subrows(directory):
        by_row.setdefault((s.case, s.ref), []).append(s)
    same = 0
    total = 0
    for case, matched in matched_all.items():
        for ref, rec in sorted(matched.items()):
            total += 1
            mine = {d.basket: d for d in minimal_positive_descendants(rec.formal)}
            expected = {}
            for s in by_row.get((case, ref), []):
                where = f"case {case} row {ref}.{s.label or '?'}"
                dev = devs.get((case, ref, s.label))
                try:
                    B = apply_trace(rec.basket, parse_trace(s.trace))
                except ValueError as exc:
                    if dev is not None and dev.kind == "trace-typo":
                        report.accepted.append(f"{where}: listed trace typo ({exc})")
                    else:
                        report.errors.append(f"{where}: {exc}")
                    continue
                exact = k_cubed(rec.formal.with_basket(B))
                _check_volume(report, where, exact, s.k3, devs, (case, ref, s.label))
                expected[B] = s.label or "?"
            if not expected:
                expected[rec.basket.reduced()] = "class"
            if set(expected) == set(mine):
                same += 1
                continue
            missing = sorted(lbl for B, lbl in expected.items() if B not in mine)
            extra = sorted((d for B, d in mine.items() if B not in expected), key=lambda d: d.k3)
            parts = []
            if missing:
                parts.append("listed but not minimal positive: " + ",".join(missing))
            if extra:
                parts.append("minimal positive but not listed: "
                             + "; ".join(f"{format_fraction(d.k3)} [{d.trace}]" for d in extra))
            report.descendant_issues.append(f"case {case} row {ref}: " + " | ".join(parts))
    report.summary.append(f"descendant sets identical for {same} of {total} classes")
