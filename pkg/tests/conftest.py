from functools import lru_cache

import pytest
from hypothesis import settings

from pluribasket.basket import Basket
from pluribasket.enumerator import enumerate_classes
from pluribasket.golden import attach_refs

settings.register_profile("default", deadline=None, max_examples=200)
settings.load_profile("default")

B_H = Basket.of(
    (9, (1, 2)), (7, 16), (3, 7), (2, (5, 13)), (5, (1, 3)), (2, 7), (3, 11), (1, 4)
)


@lru_cache(maxsize=None)
def classes(case):
    records = enumerate_classes(case)
    attach_refs(records, case)
    return tuple(records)


def by_ref(case, ref):
    for rec in classes(case):
        if rec.ref == ref:
            return rec
    raise KeyError((case, ref))


@pytest.fixture
def bh():
    return B_H
