"""Shared fixtures: the worked example tables and the golden corpus."""

import pytest
from hypothesis import settings

from lbo.golden import corpus
from lbo.magma import parse_table

settings.register_profile("ci", derandomize=True, max_examples=100)
settings.load_profile("ci")

# order-4 idempotent semigroup with zero element 0
IDEM_SG_4 = parse_table("{{0,0,0,0},{0,1,1,3},{0,1,2,3},{0,1,1,3}}")
# order-4 associative shelf with zero element 0
ASSOC_SHELF_4 = parse_table("{{0,0,0,0},{0,0,1,1},{0,0,2,2},{0,0,2,3}}")
# associative, satisfies a*b*b*c = a*b*c, but neither proto-unital nor idempotent
ABBC_ONLY_4 = parse_table("{{0,0,2,2},{0,0,2,2},{0,0,2,2},{0,1,2,3}}")
# the two-element left-projection shelf (the unique associative rack)
TRIVIAL_QUANDLE_2 = parse_table("{{0,0},{1,1}}")
# two-element semilattice: unital, idempotent, commutative
SEMILATTICE_2 = parse_table("{{0,0},{0,1}}")


@pytest.fixture
def idem_sg_4():
    return IDEM_SG_4


@pytest.fixture
def assoc_shelf_4():
    return ASSOC_SHELF_4


@pytest.fixture
def abbc_only_4():
    return ABBC_ONLY_4


@pytest.fixture(scope="session")
def golden_corpus():
    return corpus()
