"""Constructors for the standard group families and direct products."""

import logging
from functools import reduce
from math import gcd, prod

import numpy as np

from ..errors import ClosureBoundExceeded, InvalidParameters
from ..models import (
    Abelian, Alternating, CayleyFile, Cyclic, Dicyclic, Dihedral, GroupSpec,
    PermFile, Product, SemidirectCyclic, Symmetric,
)
from .finite_group import DEFAULT_ASSOC_CHECK_LIMIT, FiniteGroup, group_from_trusted_table
from .group_files import load_cayley_file, load_perm_file
from .permutations import (
    DEFAULT_CLOSURE_BOUND, alternating_generators, from_permutation_generators,
    symmetric_generators,
)

logger = logging.getLogger(__name__)


def construct_family(
    spec: GroupSpec,
    closure_bound: int = DEFAULT_CLOSURE_BOUND,
    check_associativity: bool | None = None,
    assoc_check_limit: int = DEFAULT_ASSOC_CHECK_LIMIT,
) -> FiniteGroup:
    """Build the group described by spec.

    Orders follow D_n = 2n and Dic_n = 4n, so Dic3 has order 12.
    """
    _validate(spec)
    label = spec.label

    match spec:
        case Cyclic(n=n):
            _check_bound(n, closure_bound)
            group = group_from_trusted_table(_cyclic_table(n), label=label)
        case Abelian(factors=factors):
            group = direct_product([construct_family(Cyclic(f), closure_bound) for f in factors], closure_bound)
            group = _relabel(group, label)
        case Dihedral(n=n):
            _check_bound(2 * n, closure_bound)
            group = group_from_trusted_table(_dihedral_table(n), label=label)
        case Dicyclic(n=n):
            _check_bound(4 * n, closure_bound)
            group = group_from_trusted_table(_dicyclic_table(n), label=label)
        case Symmetric(k=k):
            group = from_permutation_generators(k, symmetric_generators(k), closure_bound, label=label)
        case Alternating(k=k):
            group = from_permutation_generators(k, alternating_generators(k), closure_bound, label=label)
        case SemidirectCyclic(m=m, n=n, k=k):
            _check_bound(m * n, closure_bound)
            group = group_from_trusted_table(_semidirect_table(m, n, k), label=label)
        case Product(factors=factors):
            parts = [
                construct_family(f, closure_bound, check_associativity, assoc_check_limit)
                for f in factors
            ]
            group = _relabel(direct_product(parts, closure_bound), label)
        case CayleyFile(path=path):
            group = load_cayley_file(path, check_associativity, assoc_check_limit)
        case PermFile(path=path):
            group = load_perm_file(path, closure_bound)
        case _:
            raise InvalidParameters(f"Unknown group spec: {spec!r}")

    logger.info(f"Constructed {label} (order {group.order})")
    return group


def direct_product(gs: list[FiniteGroup], closure_bound: int = DEFAULT_CLOSURE_BOUND) -> FiniteGroup:
    """Component-wise product. Element (i_1, ..., i_k) has index i_1*n_2*...*n_k + ... + i_k."""
    total = prod(g.order for g in gs)
    _check_bound(total, closure_bound)
    if not gs:
        return group_from_trusted_table(np.zeros((1, 1), dtype=np.intp), label="Z1")

    mul = reduce(_product_table, (g.mul for g in gs))
    return group_from_trusted_table(mul, label="x".join(g.label for g in gs))


def _product_table(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n1, n2 = a.shape[0], b.shape[0]
    table = a[:, None, :, None] * n2 + b[None, :, None, :]
    return table.reshape(n1 * n2, n1 * n2)


def _relabel(group: FiniteGroup, label: str) -> FiniteGroup:
    return FiniteGroup(
        order=group.order,
        mul=group.mul,
        identity=group.identity,
        inverse=group.inverse,
        elt_order=group.elt_order,
        label=label,
    )


# ---------------------------------------------------------------------------
# Family tables
# ---------------------------------------------------------------------------

def _cyclic_table(n: int) -> np.ndarray:
    idx = np.arange(n)
    return np.add.outer(idx, idx) % n


def _dihedral_table(n: int) -> np.ndarray:
    # r^k s^j has index j*n + k; s r^k = r^-k s.
    idx = np.arange(2 * n)
    k, j = idx % n, idx // n
    k1, k2 = k[:, None], k[None, :]
    j1, j2 = j[:, None], j[None, :]
    sign = np.where(j1 == 1, -1, 1)
    rot = (k1 + sign * k2) % n
    ref = (j1 + j2) % 2
    return ref * n + rot


def _dicyclic_table(n: int) -> np.ndarray:
    # a^k x^j has index j*2n + k, with a^(2n) = 1, x^2 = a^n, x a x^-1 = a^-1.
    m = 2 * n
    idx = np.arange(2 * m)
    k, j = idx % m, idx // m
    k1, k2 = k[:, None], k[None, :]
    j1, j2 = j[:, None], j[None, :]
    rot = np.where(j1 == 0, k1 + k2, k1 - k2)
    rot = np.where((j1 == 1) & (j2 == 1), rot + n, rot) % m
    ref = (j1 + j2) % 2
    return ref * m + rot


def _semidirect_table(m: int, n: int, k: int) -> np.ndarray:
    # (a, b) has index b*m + a; (a1, b1)(a2, b2) = (a1 + k^b1 a2, b1 + b2).
    idx = np.arange(m * n)
    a, b = idx % m, idx // m
    twist = np.array([pow(k, e, m) for e in range(n)], dtype=np.intp)
    a1, a2 = a[:, None], a[None, :]
    b1, b2 = b[:, None], b[None, :]
    first = (a1 + twist[b1] * a2) % m
    second = (b1 + b2) % n
    return second * m + first


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def _validate(spec: GroupSpec) -> None:
    match spec:
        case Cyclic(n=n) | Dihedral(n=n) | Dicyclic(n=n):
            _positive(spec, n)
        case Symmetric(k=k) | Alternating(k=k):
            _positive(spec, k)
        case Abelian(factors=factors):
            if not factors:
                raise InvalidParameters(f"{spec.label}: needs at least one factor")
            for f in factors:
                _positive(spec, f)
        case SemidirectCyclic(m=m, n=n, k=k):
            for value in (m, n, k):
                _positive(spec, value)
            if gcd(k, m) != 1:
                raise InvalidParameters(f"{spec.label}: gcd(k, m) must be 1")
            if pow(k, n, m) != 1 % m:
                raise InvalidParameters(f"{spec.label}: k^n must be 1 mod m")
        case Product(factors=factors):
            if not factors:
                raise InvalidParameters("Product needs at least one factor")


def _positive(spec: GroupSpec, value: int) -> None:
    if value < 1:
        raise InvalidParameters(f"{spec.label}: parameters must be positive")


def _check_bound(order: int, closure_bound: int) -> None:
    if order > closure_bound:
        raise ClosureBoundExceeded(closure_bound)
