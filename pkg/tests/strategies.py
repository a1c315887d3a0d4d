from math import gcd

from hypothesis import strategies as st

from pluribasket.basket import Basket, Pair


@st.composite
def pairs(draw, max_r=16):
    """Terminal pairs: coprime with 2b <= r."""
    r = draw(st.integers(2, max_r))
    b = draw(st.integers(1, r // 2).filter(lambda b: gcd(b, r) == 1))
    return Pair(b, r)


def baskets(max_r=16, max_entries=5, max_weight=3):
    return st.lists(
        st.tuples(st.integers(1, max_weight), pairs(max_r)), min_size=1, max_size=max_entries
    ).map(Basket)
