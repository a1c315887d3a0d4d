from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pluribasket import tables
from pluribasket.enumerator import (
    FILTERS,
    ClassRecord,
    CoeffVector,
    bounds,
    coefficients,
    enumerate_classes,
    epsilons,
    validate_class,
    validate_forms,
)
from pluribasket.formal import InfeasibleProfile, PluriProfile
from pluribasket.levels import unpack_to_level
from pluribasket.linear import LinearForm

from .conftest import by_ref, classes

ROW1_COUNTS = (4, 0, 0, 2, 0, 2, 0, 0, 4, 0, 0, 0, 2, 0, 0)
ROW122_COUNTS = (9, 0, 1, 2, 0, 2, 2, 0, 5, 0, 1, 1, 1, 0, 0)


def zeros():
    return {m: 0 for m in range(2, 14)}


@pytest.mark.parametrize("case", ["i", "ii"])
def test_tables_are_consistent(case):
    assert validate_forms(case) == []


def test_printed_typo_is_caught(monkeypatch):
    level7 = dict(tables.CASE_I_LEVELS[7])
    level7[(1, 2)] = LinearForm.parse("2chi - 3P3 + 3P4 - P5 + P6 - 2P7 + P8 + eta")
    monkeypatch.setitem(tables.CASE_I_LEVELS, 7, level7)
    problems = validate_forms("i")
    assert problems and any("(1, 2)" in p for p in problems)


def test_slots():
    assert len(tables.SLOTS["i"]) == len(tables.SLOTS["ii"]) == 15
    assert tables.SLOTS["i"][-1] == (1, 5) and tables.SLOTS["ii"][-1] == (1, 6)


def test_bounds():
    assert bounds("i", 6, zeros()) is None
    assert bounds("i", 5, zeros()) is None
    P = zeros()
    P.update({6: 1, 7: 1, 8: 1, 10: 1})
    b = bounds("i", 5, P)
    assert b.p13 == range(0, 2)
    assert b.eta == range(0, 10) and b.beta == range(0, 4)
    assert b.alpha(2, 3, "i") == range(0, 4)
    b = bounds("ii", 3, zeros())
    assert b.p13 == range(0, 2) and b.eta == range(0, 6) and b.zeta == range(0, 1)
    assert bounds("ii", 4, zeros()) is None


def test_coefficients_row1():
    p = PluriProfile.from_values(2, [0] * 9)
    levels = coefficients(p)
    assert sorted(levels) == [7, 8, 9, 10, 11, 12]
    assert levels[12].counts == ROW1_COUNTS
    assert levels[12].basket() == by_ref("i", 1).basket
    assert all(e >= 0 for e in epsilons(p).values())


def test_coefficients_infeasible():
    with pytest.raises(InfeasibleProfile) as exc:
        coefficients(PluriProfile.from_values(2, [0, 0, 0, 0, 1, 0, 0, 0, 0]))
    assert exc.value.args


def test_coeff_vector():
    v = CoeffVector(12, "i", ROW1_COUNTS)
    assert v.as_dict()[(3, 7)] == 2
    assert v.basket().size() == sum(ROW1_COUNTS)


def test_case_i_count_and_spot_rows():
    recs = classes("i")
    assert len(recs) == 149
    assert len({r.key for r in recs}) == 149
    row1, row122 = by_ref("i", 1), by_ref("i", 122)
    assert row1.b12.counts == ROW1_COUNTS and row1.k3 == Fraction(1, 210)
    assert row122.b12.counts == ROW122_COUNTS and row122.k3 == Fraction(19, 3465)
    assert row122.profile.chi == 4


def test_case_ii_classes():
    recs = classes("ii")
    assert sorted(r.k3 for r in recs) == [Fraction(1, 420), Fraction(1, 360)]
    assert all(r.b12.counts[13] == 0 and r.b12.counts[14] == 1 for r in recs)


@pytest.mark.parametrize("case", ["i", "ii"])
def test_every_class_passes_the_operator_oracle(case):
    bad = [d for d in map(validate_class, classes(case)) if not d.ok]
    assert bad == []


def test_oracle_catches_a_corrupted_record():
    rec = by_ref("i", 122)
    counts = list(rec.b12.counts)
    counts[0] += 1
    counts[8] -= 1
    fake = ClassRecord("i", rec.profile, CoeffVector(12, "i", tuple(counts)), rec.k3, ref=122)
    diag = validate_class(fake)
    assert not diag.ok and diag.label == "i:122"


def test_output_is_sorted_and_numbered():
    recs = classes("i")
    assert [r.key for r in recs] == sorted(r.key for r in recs)
    assert [r.row for r in recs] == list(range(1, 150))
    assert all(r.witnesses == sorted(r.witnesses) for r in recs)


def test_parallel_matches_serial():
    serial = enumerate_classes("ii")
    parallel = enumerate_classes("ii", jobs=2)
    assert [(r.key, r.k3, r.witnesses) for r in serial] == [(r.key, r.k3, r.witnesses) for r in parallel]


def test_unknown_filter_rejected():
    with pytest.raises(ValueError):
        enumerate_classes("i", disabled=["bogus"])


def test_disabling_a_filter_only_adds_classes():
    keys = {r.key for r in classes("ii")}
    for name in FILTERS:
        assert keys <= {r.key for r in enumerate_classes("ii", disabled=[name])}


def test_product_rule_matters():
    assert len(enumerate_classes("i", disabled=["product-rule"])) > 149


@settings(max_examples=60)
@given(st.integers(2, 5), st.lists(st.integers(0, 1), min_size=9, max_size=9), st.integers(0, 3), st.integers(0, 3))
def test_closed_forms_agree_with_unpacking(chi, ps, p13, eta):
    # any feasible profile, not only emitted ones, must unpack consistently
    p = PluriProfile.from_values(chi, ps, p13=p13, eta=eta)
    try:
        levels = coefficients(p)
    except InfeasibleProfile:
        return
    B12 = levels[12].basket()
    for n, vec in levels.items():
        assert unpack_to_level(B12, n) == vec.basket()
