"""CSV and JSON renderings of class records and descendant reports.

Rationals are written as ``p/q`` in lowest terms, never as decimals.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from .enumerator import ClassRecord
from .minimize import Descendant
from .tables import SLOTS

__all__ = [
    "format_fraction",
    "parse_fraction",
    "slot_name",
    "record_row",
    "record_json",
    "records_to_csv",
    "records_to_json",
    "descendant_rows",
    "descendants_to_csv",
    "descendants_to_json",
]

P_RANGE = range(3, 14)
WITNESS = ("P13", "eta", "zeta", "alpha", "beta")


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


def slot_name(slot) -> str:
    return f"n({slot[0]},{slot[1]})"


def record_columns(case: str) -> List[str]:
    return (
        ["row", "ref", "chi"]
        + [f"P{m}" for m in P_RANGE]
        + ["eta", "zeta", "alpha", "beta", "witness_count"]
        + [slot_name(s) for s in SLOTS[case]]
        + ["k3"]
    )


def record_row(rec: ClassRecord) -> Dict[str, object]:
    """Flat field map; the witness columns hold the smallest witness."""
    p = rec.profile
    w = rec.witnesses[0] if rec.witnesses else (p[13], p.eta, p.zeta, p.alpha, p.beta)
    row: Dict[str, object] = {"row": rec.row, "ref": rec.ref or "", "chi": p.chi}
    for m in range(3, 13):
        row[f"P{m}"] = p[m]
    row.update(zip(WITNESS, w))
    row["witness_count"] = len(rec.witnesses)
    for slot, n in zip(SLOTS[rec.case], rec.b12.counts):
        row[slot_name(slot)] = n
    row["k3"] = format_fraction(rec.k3)
    return row


def record_json(rec: ClassRecord) -> Dict[str, object]:
    flat = record_row(rec)
    return {
        "row": flat["row"],
        "ref": flat["ref"],
        "case": rec.case,
        "chi": flat["chi"],
        "P": {f"P{m}": flat[f"P{m}"] for m in P_RANGE},
        "witness": {k: flat[k] for k in ("eta", "zeta", "alpha", "beta")},
        "witness_count": flat["witness_count"],
        "all_witnesses": [dict(zip(WITNESS, w)) for w in rec.witnesses],
        "b12": {slot_name(s): flat[slot_name(s)] for s in SLOTS[rec.case]},
        "k3": flat["k3"],
    }


def _csv(columns: Sequence[str], rows: Iterable[Dict[str, object]]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, columns, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def records_to_csv(records: Sequence[ClassRecord], case: str) -> str:
    return _csv(record_columns(case), (record_row(r) for r in records))


def records_to_json(records: Sequence[ClassRecord]) -> str:
    return json.dumps([record_json(r) for r in records], indent=1, ensure_ascii=False) + "\n"


DESCENDANT_COLUMNS = ["case", "row", "ref", "k3", "trace", "basket", "is_class"]


def descendant_rows(rec: ClassRecord, descendants: Sequence[Descendant]) -> List[Dict[str, object]]:
    own = rec.basket.reduced()
    return [
        {
            "case": rec.case,
            "row": rec.row,
            "ref": rec.ref or "",
            "k3": format_fraction(d.k3),
            "trace": d.trace,
            "basket": str(d.basket),
            "is_class": int(d.basket == own),
        }
        for d in descendants
    ]


def descendants_to_csv(items: Iterable[Tuple[ClassRecord, Sequence[Descendant]]]) -> str:
    rows = [r for rec, ds in items for r in descendant_rows(rec, ds)]
    return _csv(DESCENDANT_COLUMNS, rows)


def descendants_to_json(items: Iterable[Tuple[ClassRecord, Sequence[Descendant]]]) -> str:
    rows = [r for rec, ds in items for r in descendant_rows(rec, ds)]
    return json.dumps(rows, indent=1, ensure_ascii=False) + "\n"
