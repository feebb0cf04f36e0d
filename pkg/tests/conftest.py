import random

import pytest

from normbrauer.finite_group import (
    builtin_groups,
    cyclic,
    derived_subgroup,
    element_order,
    generated_subgroup,
    symmetric,
)


@pytest.fixture(scope="session")
def catalogue():
    return builtin_groups(24)


@pytest.fixture(scope="session")
def S3():
    return symmetric(3)


@pytest.fixture(scope="session")
def C4():
    return cyclic(4)


@pytest.fixture(scope="session")
def A3(S3):
    return derived_subgroup(S3)


@pytest.fixture(scope="session")
def transposition(S3):
    return next(g for g in S3 if element_order(S3, g) == 2)


@pytest.fixture(scope="session")
def three_cycle(S3):
    return next(g for g in S3 if element_order(S3, g) == 3)


@pytest.fixture(scope="session")
def C4_half(C4):
    return generated_subgroup(C4, [2])


@pytest.fixture
def rng():
    return random.Random(20261019)
