from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pluribasket.basket import Basket, Pair, delta_n, delta_n_basket, is_prime_packing, sigma, sigma_prime
from pluribasket.levels import AlreadyAtLevel, epsilon_n, level_set, neighbors, unpack_to_level

from .conftest import B_H
from .strategies import baskets, pairs


def test_level_nine_adds_two_fractions():
    assert set(level_set(9, 12)) - set(level_set(8, 12)) == {Fraction(4, 9), Fraction(2, 9)}


def test_low_level_is_unit_fractions():
    assert list(level_set(4, 6)) == [Fraction(1, k) for k in range(2, 7)]


def test_level_seven_order():
    fr = list(level_set(7, 7))
    assert fr[:3] == [Fraction(1, 2), Fraction(3, 7), Fraction(2, 5)]


def test_level_set_rejects_bad_arguments():
    with pytest.raises(ValueError):
        level_set(1, 5)
    with pytest.raises(ValueError):
        level_set(8, 7)


def test_neighbors():
    assert neighbors(Pair(4, 9), 8) == (Pair(1, 2), Pair(3, 7))
    assert neighbors(Pair(2, 9), 8) == (Pair(1, 4), Pair(1, 5))
    assert neighbors(Pair(2, 7), 6) == (Pair(1, 3), Pair(1, 4))
    with pytest.raises(AlreadyAtLevel):
        neighbors(Pair(3, 7), 7)


def test_unpack_to_level():
    assert unpack_to_level(Basket.of((4, 9)), 8) == Basket.of((1, 2), (3, 7))
    assert unpack_to_level(Basket.of((1, 2)), 5) == Basket.of((1, 2))
    # 4/9 sits between 3/7 and 1/2, so 7/16 splits at 4/9, not at 1/2
    assert unpack_to_level(Basket.of((7, 16)), 12) == Basket.of((4, 9), (3, 7))
    assert unpack_to_level(Basket.of((7, 16)), 8) == Basket.of((1, 2), (2, (3, 7)))


def test_bh_unpacks_to_row_122():
    expect = Basket.of(
        (9, (1, 2)), (4, 9), (2, (3, 7)), (2, (2, 5)), (2, (3, 8)), (5, (1, 3)), (2, 7), (3, 11), (1, 4)
    )
    assert unpack_to_level(B_H, 12) == expect


def test_epsilon_n():
    assert epsilon_n(Basket.of((2, 5)), 5) == 1
    assert all(epsilon_n(Basket.of((1, 2)), n) == 0 for n in range(2, 15))
    assert epsilon_n(Basket.of((7, 16)), 12) == 0


@given(baskets(), st.integers(2, 16))
def test_level_monotonicity(B, n):
    assert unpack_to_level(B, n - 1) == unpack_to_level(unpack_to_level(B, n), n - 1)


@given(baskets(), st.integers(2, 16), st.data())
def test_unpacking_keeps_low_deltas(B, n, data):
    j = data.draw(st.integers(2, n))
    assert delta_n_basket(unpack_to_level(B, n), j) == delta_n_basket(B, j)


@given(baskets(), st.integers(3, 16))
def test_epsilon_is_the_delta_drop(B, n):
    e = epsilon_n(B, n)
    assert e >= 0
    assert delta_n_basket(unpack_to_level(B, n - 1), n) == delta_n_basket(unpack_to_level(B, n), n) + e


@given(baskets(), st.integers(2, 16))
def test_unpacking_conserves_sigma(B, n):
    U = unpack_to_level(B, n)
    assert sigma(U) == sigma(B)
    assert sigma_prime(U) >= sigma_prime(B)


@given(baskets(max_r=12))
def test_fixed_point(B):
    assert unpack_to_level(B, 12) == B


@given(pairs(max_r=20), pairs(max_r=20))
def test_prime_packing_jump(p1, p2):
    if not is_prime_packing(p1, p2) or p1.r + p2.r > 40:
        return
    n = p1.r + p2.r
    assert delta_n(p1, n) + delta_n(p2, n) == delta_n(p1 + p2, n) + 1
