"""Transcribe the markdown reference tables into the golden CSV files.

Usage: python3 tools/extract_goldens.py SOURCE.md OUTDIR

Only mechanical normalization happens here (succ / '>' become the single
relation sign, '$' and spacing are dropped).  Anything the source omits is
left blank and listed in the notes file written alongside.
"""

import csv
import re
import sys
from pathlib import Path

CASE_I_SLOTS = ["1/2", "5/11", "4/9", "3/7", "5/12", "2/5", "3/8", "4/11",
                "1/3", "3/10", "2/7", "3/11", "1/4", "2/9", "1/5"]
CASE_II_SLOTS = ["1/2", "5/11", "4/9", "3/7", "5/12", "2/5", "3/8", "4/11",
                 "1/3", "3/10", "2/7", "3/11", "1/4", "1/5", "1/6"]

ROW_RE = re.compile(r"^(\d+)\t([\d,]+)\t\$?([\d,]+)\$?\t(\d+/\d+)\s*$")
SUB_RE = re.compile(r"^([a-z]?)\t\t(.+)\t(\d+/\d+)\s*$")


def clean_trace(text: str) -> str:
    t = text.replace("$", "").replace("\\succ", "≻").replace(">", "≻")
    return re.sub(r"\s+", " ", t).strip()


def parse_tables(lines):
    tables = {"i": [], "ii": []}
    subrows = []
    notes = []
    case = "i"
    current = None
    for lineno, line in enumerate(lines, start=1):
        if "Classification of Case 2" in line:
            case = "ii"
            current = None
            continue
        m = ROW_RE.match(line)
        if m:
            ref, params, tup, k3 = m.groups()
            vals = params.split(",")
            counts = tup.split(",")
            if not vals or len(vals) > 10 or len(counts) not in (13, 15):
                continue
            ps = vals[1:]
            row = {"ref": int(ref), "chi": vals[0], "P": " ".join(ps), "k3": k3}
            if len(ps) < 9:
                notes.append(f"case {case} row {ref}: {len(ps)} of 9 values P3..P11 printed")
            if case == "ii" and len(counts) == 13:
                counts = counts[:12] + ["0", "0"] + counts[12:]
                notes.append(f"case ii row {ref}: n(1,4) and n(1,5) not printed; filled with 0")
            slots = CASE_I_SLOTS if case == "i" else CASE_II_SLOTS
            row.update(zip(slots, counts))
            tables[case].append(row)
            current = (case, int(ref))
            continue
        m = SUB_RE.match(line)
        if m and current:
            label, trace, k3 = m.groups()
            if not label:
                notes.append(f"case {current[0]} row {current[1]}: sub-row without a label")
            subrows.append({"case": current[0], "ref": current[1], "label": label,
                            "trace": clean_trace(trace), "k3": k3})
    seen = {}
    for s in subrows:
        key = (s["case"], s["ref"], s["label"])
        if s["label"] and key in seen:
            notes.append(f"case {s['case']} row {s['ref']}: label {s['label']!r} used twice")
        seen[key] = True
    return tables, subrows, notes


def main(argv):
    src, out = Path(argv[1]), Path(argv[2])
    tables, subrows, notes = parse_tables(src.read_text(encoding="utf-8").splitlines())
    out.mkdir(parents=True, exist_ok=True)
    for case, slots in (("i", CASE_I_SLOTS), ("ii", CASE_II_SLOTS)):
        with open(out / f"case_{case}.csv", "w", newline="", encoding="utf-8") as fh:
            w = csv.DictWriter(fh, ["ref", "chi", "P"] + slots + ["k3"], lineterminator="\n")
            w.writeheader()
            w.writerows(tables[case])
    with open(out / "subrows.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.DictWriter(fh, ["case", "ref", "label", "trace", "k3"], lineterminator="\n")
        w.writeheader()
        w.writerows(subrows)
    with open(out / "transcription_notes.txt", "w", encoding="utf-8") as fh:
        fh.write("\n".join(notes) + "\n")
    print(f"case i: {len(tables['i'])} rows, case ii: {len(tables['ii'])} rows, "
          f"{len(subrows)} sub-rows, {len(notes)} notes")


if __name__ == "__main__":
    main(sys.argv)
