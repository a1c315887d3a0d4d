from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pluribasket.basket import (
    Basket,
    BasketParseError,
    DomainError,
    InvalidPair,
    NotTerminal,
    Pair,
    PairNotPresent,
    delta_n,
    delta_n_basket,
    format_basket,
    is_prime_packing,
    make_pair,
    pack,
    parse_basket,
    sigma,
    sigma_prime,
    sigma_prime_drop,
)

from .conftest import B_H
from .strategies import baskets, pairs

ROW1 = Basket.of((4, (1, 2)), (2, (3, 7)), (2, (2, 5)), (4, (1, 3)), (2, (1, 4)))


def test_make_pair():
    assert make_pair(1, 2) == Pair(1, 2)
    assert make_pair(7, 16) == Pair(7, 16)
    with pytest.raises(NotTerminal):
        make_pair(3, 6)
    with pytest.raises(NotTerminal):
        make_pair(5, 7)
    assert make_pair(3, 6, "generalized") == Pair(3, 6)


@pytest.mark.parametrize("b,r", [(0, 2), (-1, 3), (3, 3), (4, 3), (1, 0)])
def test_invalid_pairs(b, r):
    with pytest.raises(InvalidPair):
        make_pair(b, r, "generalized")


def test_sigma():
    assert sigma(Basket()) == 0
    assert sigma(B_H) == 40
    assert sigma(ROW1) == 20


def test_sigma_prime():
    assert sigma_prime(Basket()) == 0
    assert sigma_prime(Basket.of((1, 2), (1, 3))) == Fraction(5, 6)
    assert sigma_prime(B_H) == Fraction(768799, 48048)


def test_delta_n():
    assert delta_n((1, 4), 3) == 0
    assert delta_n((1, 2), 5) == 4
    assert delta_n((2, 5), 5) == 5
    with pytest.raises(DomainError):
        delta_n(Pair(3, 5), 4)


def test_delta_n_basket():
    assert delta_n_basket(Basket(), 7) == 0
    assert delta_n_basket(Basket.of((1, 2), (1, 3)), 5) == 6
    assert delta_n_basket(Basket.of((2, 5)), 5) == 5


def test_pack():
    assert pack(Basket.of((1, 2), (1, 3)), (1, 2), (1, 3)) == Basket.of((2, 5))
    B = Basket.of((2, (2, 5)), (2, (3, 8)), (1, 3))
    B = pack(pack(B, (2, 5), (3, 8)), (2, 5), (3, 8))
    assert B.weight((5, 13)) == 2
    B = Basket.of((9, (1, 2)), (4, 9), (3, 7))
    assert (7, 16) in pack(B, (4, 9), (3, 7))


def test_pack_requires_both_copies():
    with pytest.raises(PairNotPresent):
        pack(Basket.of((1, 2)), (1, 2), (1, 3))
    with pytest.raises(PairNotPresent):
        pack(Basket.of((1, 2)), (1, 2), (1, 2))
    assert pack(Basket.of((2, (2, 5))), (2, 5), (2, 5)) == Basket.of((4, 10))


def test_pack_does_not_mutate():
    B = Basket.of((1, 2), (1, 3))
    pack(B, (1, 2), (1, 3))
    assert B == Basket.of((1, 2), (1, 3))


def test_is_prime_packing():
    assert is_prime_packing((1, 2), (3, 7))
    assert not is_prime_packing((1, 2), (1, 2))
    assert is_prime_packing((1, 3), (3, 8))


def test_sigma_prime_drop():
    assert sigma_prime_drop((1, 2), (1, 3)) == Fraction(1, 30)
    assert sigma_prime_drop((1, 2), (1, 2)) == 0
    assert sigma_prime_drop((2, 5), (3, 8)) == Fraction(1, 520)


def test_canonical_order():
    B = Basket.of((1, 3), (2, 4), (1, 2), (1, 3))
    assert [str(p) for p in B.pairs()] == ["(1,2)", "(2,4)", "(1,3)"]
    assert B.weight((1, 3)) == 2
    assert B == Basket.of((1, 2), (2, (1, 3)), (2, 4))
    assert hash(B) == hash(Basket.of((1, 2), (2, (1, 3)), (2, 4)))


def test_reduced():
    assert Basket.of((4, 10), (2, 5)).reduced() == Basket.of((3, (2, 5)))


def test_parse_and_format():
    text = "# B_H\n9 x (1,2)\n(7,16)\n\n(3,7)\n2 x (5,13)\n5 x (1,3)\n(2,7)\n(3,11)\n(1,4)  # last\n"
    assert parse_basket(text) == B_H
    assert parse_basket(format_basket(B_H)) == B_H
    assert format_basket(Basket.of((9, (1, 2)))) == "9 x (1,2)"


@pytest.mark.parametrize("text,lineno", [("(1,2)\n(1,0)", 2), ("x (1,2)", 1), ("0 x (1,2)", 1), ("(3,6)", 1)])
def test_parse_errors_carry_line(text, lineno):
    with pytest.raises(BasketParseError) as exc:
        parse_basket(text, kind="terminal")
    assert exc.value.lineno == lineno
    assert f"line {lineno}" in str(exc.value)


# -- properties ---------------------------------------------------------------


def _two_elements(B, data):
    elems = list(B.elements())
    i = data.draw(st.integers(0, len(elems) - 1))
    j = data.draw(st.integers(0, len(elems) - 1).filter(lambda j: j != i))
    return elems[i], elems[j]


@given(baskets(max_entries=4), st.data())
def test_packing_never_raises_delta(B, data):
    if B.size() < 2:
        return
    p1, p2 = _two_elements(B, data)
    C = pack(B, p1, p2)
    for n in range(2, 31):
        assert delta_n_basket(B, n) >= delta_n_basket(C, n)


@given(baskets(max_entries=4), st.data())
def test_packing_keeps_sigma_and_drops_sigma_prime(B, data):
    if B.size() < 2:
        return
    p1, p2 = _two_elements(B, data)
    C = pack(B, p1, p2)
    assert sigma(C) == sigma(B)
    assert sigma_prime(B) - sigma_prime(C) == sigma_prime_drop(p1, p2)


@given(pairs(), pairs(), st.integers(2, 30))
def test_delta_equality_characterization(p1, p2, n):
    kept = delta_n(p1, n) + delta_n(p2, n) == delta_n(p1 + p2, n)
    same_cell = any(
        all(d * p.r <= p.b * n <= (d + 1) * p.r for p in (p1, p2)) for d in range(n)
    )
    assert kept == same_cell


@given(pairs(), st.integers(1, 40))
def test_delta_nonnegative(p, n):
    assert delta_n(p, n) >= 0


@given(baskets())
def test_canonical_form_idempotent(B):
    assert Basket(B.entries) == B
    assert Basket(list(B.entries)[::-1]) == B


@given(baskets(max_entries=6, max_weight=1))
def test_pack_order_independent(B):
    elems = list(B.elements())
    if len(elems) < 4:
        return
    a, b, c, d = elems[:4]
    assert pack(pack(B, a, b), c, d) == pack(pack(B, c, d), a, b)
