import csv
import io
import json
import shutil
from fractions import Fraction

import pytest

from pluribasket.cli import main
from pluribasket.golden import (
    GoldenMissing,
    GoldenRow,
    default_dir,
    load_deviations,
    load_subrows,
    load_table,
    verify,
)
from pluribasket.io import (
    descendants_to_csv,
    descendants_to_json,
    format_fraction,
    parse_fraction,
    records_to_csv,
    records_to_json,
)
from pluribasket.minimize import minimal_positive_descendants

from .conftest import by_ref, classes


def cached():
    return {"i": list(classes("i")), "ii": list(classes("ii"))}


@pytest.fixture
def golden_copy(tmp_path):
    dst = tmp_path / "golden"
    shutil.copytree(default_dir(), dst)
    return dst


def rewrite(path, old, new):
    text = path.read_text(encoding="utf-8")
    assert old in text
    path.write_text(text.replace(old, new, 1), encoding="utf-8")


# -- golden data ----------------------------------------------------------------


def test_golden_tables_load():
    assert len(load_table("i")) == 149
    assert len(load_table("ii")) == 2
    assert len(load_subrows()) == 238
    kinds = {d.kind for d in load_deviations()}
    assert kinds == {"rounded-volume", "volume-mismatch", "trace-typo"}


def test_row_with_a_missing_p_value_still_matches():
    g = GoldenRow("i", 1, 2, (0,) * 8, by_ref("i", 1).b12.counts, Fraction(1, 210))
    assert g.matches(by_ref("i", 1))
    assert not g.matches(by_ref("i", 2))


def test_verify_passes():
    report = verify(classes=cached())
    assert report.errors == []
    assert report.exit_code() == 0
    assert "case i: 149 classes, 149 golden rows, 149 matched" in report.summary
    assert any(a.startswith("case i row 128: printed K^3 42/10303 is rounded") for a in report.accepted)


def test_descendant_differences_fail_only_when_strict():
    report = verify(classes=cached())
    assert report.descendant_issues
    assert report.exit_code(strict=True) == 1


def test_edited_volume_is_a_mismatch(golden_copy):
    rewrite(golden_copy / "case_i.csv", ",1/210\n", ",1/211\n")
    report = verify(golden_copy, classes=cached(), descendants=False)
    assert report.exit_code() == 1
    assert any("row 1:" in e for e in report.errors)


def test_rounded_volume_needs_a_listing(golden_copy):
    rewrite(golden_copy / "deviations.csv", "i,128,,rounded-volume", "i,999,,rounded-volume")
    report = verify(golden_copy, classes=cached(), descendants=False)
    assert any("row 128" in e for e in report.errors)


def test_dropped_row_is_reported(golden_copy):
    path = golden_copy / "case_ii.csv"
    lines = path.read_text(encoding="utf-8").splitlines(keepends=True)
    path.write_text("".join(lines[:-1]), encoding="utf-8")
    report = verify(golden_copy, classes=cached(), descendants=False)
    assert any("extra class" in e for e in report.errors)


def test_missing_golden_directory(tmp_path):
    with pytest.raises(GoldenMissing):
        verify(tmp_path / "nowhere", classes=cached())
    assert main(["verify", "--golden", str(tmp_path / "nowhere")]) == 2


# -- serialization --------------------------------------------------------------


def test_fraction_text():
    assert format_fraction(Fraction(6, 4)) == "3/2"
    assert format_fraction(Fraction(2)) == "2/1"
    assert parse_fraction(" 31/48048 ") == Fraction(31, 48048)


def test_csv_and_json_agree():
    recs = list(classes("ii"))
    rows = list(csv.DictReader(io.StringIO(records_to_csv(recs, "ii"))))
    items = json.loads(records_to_json(recs))
    assert len(rows) == len(items) == 2
    for row, item in zip(rows, items):
        assert row["k3"] == item["k3"]
        assert int(row["chi"]) == item["chi"]
        assert int(row["witness_count"]) == item["witness_count"]
        for k, v in item["P"].items():
            assert int(row[k]) == v
        for k, v in item["b12"].items():
            assert int(row[k]) == v
    assert {Fraction(i["k3"]) for i in items} == {Fraction(1, 420), Fraction(1, 360)}


def test_descendant_reports():
    rec = by_ref("i", 6)
    ds = minimal_positive_descendants(rec.formal)
    rows = list(csv.DictReader(io.StringIO(descendants_to_csv([(rec, ds)]))))
    assert rows[0]["k3"] == "1/1092" and rows[0]["ref"] == "6" and rows[0]["is_class"] == "0"
    assert json.loads(descendants_to_json([(rec, ds)]))[0]["trace"] == "2(2,5),2(3,8) ≻ 2(5,13)"


# -- command line ---------------------------------------------------------------


@pytest.fixture
def bh_file(tmp_path):
    path = tmp_path / "bh.txt"
    path.write_text("9 x (1,2)\n(7,16)\n(3,7)\n2 x (5,13)\n5 x (1,3)\n(2,7)\n(3,11)\n(1,4)\n")
    return path


def test_cli_invariants(bh_file, capsys):
    assert main(["invariants", str(bh_file), "--chi", "4", "--m", "12", "--delta", "12"]) == 0
    out = capsys.readouterr().out
    assert "K^3     31/48048" in out
    assert "sigma   40" in out
    assert "chi_12   2" in out


def test_cli_unpack(tmp_path, capsys):
    path = tmp_path / "b.txt"
    path.write_text("(7,16)\n")
    assert main(["unpack", str(path), "--level", "12"]) == 0
    assert capsys.readouterr().out.split() == ["(4,9)", "(3,7)"]


def test_cli_parse_error(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("(1,2)\n(1 2)\n")
    assert main(["invariants", str(path), "--chi", "1"]) == 2
    assert "line 2" in capsys.readouterr().err


def test_cli_missing_file(tmp_path):
    assert main(["unpack", str(tmp_path / "none.txt"), "--level", "5"]) == 2


def test_cli_enumerate_json(tmp_path, capsys):
    out = tmp_path / "ii.json"
    assert main(["enumerate", "--case", "ii", "--format", "json", "-o", str(out)]) == 0
    assert [item["k3"] for item in json.loads(out.read_text())] == ["1/420", "1/360"]
    assert "2 classes" in capsys.readouterr().err


def test_cli_minimize_row(capsys):
    assert main(["minimize", "--row", "i:1"]) == 0
    out = capsys.readouterr().out
    assert "min K^3 = 1/210 at case-i row 1" in out


def test_cli_minimize_unknown_row(capsys):
    assert main(["minimize", "--row", "i:999"]) == 2


def test_cli_usage_errors():
    with pytest.raises(SystemExit) as exc:
        main(["minimize", "--row", "iii:1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["enumerate", "--no-filter", "bogus"])


def test_cli_verify(capsys):
    assert main(["verify", "--tables-only", "--quiet"]) == 0
    assert capsys.readouterr().out.rstrip().endswith("PASS")
