import pytest

from src.catalog import MAX_CATALOG_ORDER, build_group, groups_of_order
from src.groups import construct_family, from_permutation_generators
from src.models import Cyclic, Dicyclic


def brute_force_order(group, a: int) -> int:
    """Order of a by repeated multiplication."""
    x, t = a, 1
    while x != group.identity:
        x = group.product(x, a)
        t += 1
    return t


@pytest.fixture(scope="session")
def catalog():
    """(entry, group) for every catalog group up to the maximum order, built once."""
    pairs = []
    for n in range(1, MAX_CATALOG_ORDER + 1):
        for entry in groups_of_order(n):
            pairs.append((entry, build_group(entry.spec)))
    return pairs


@pytest.fixture(scope="session")
def s3():
    return from_permutation_generators(3, [[1, 0, 2], [0, 2, 1]], label="S3")


@pytest.fixture(scope="session")
def q8():
    return construct_family(Dicyclic(2))


@pytest.fixture
def z12():
    return construct_family(Cyclic(12))


# Latin square with identity 0 and x*x = 0 everywhere. No group of order 5 has
# that property, so some triple fails associativity.
NON_ASSOCIATIVE_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]
