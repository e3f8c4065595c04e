"""Finite groups stored as Cayley tables, with validation and element orders."""

import logging
from dataclasses import dataclass

import numpy as np

from ..errors import (
    InvalidGroupTable, InvalidParameters, NoIdentity, NoInverse, NotAssociative, NotLatinSquare,
)
from ..numtheory import factorize

logger = logging.getLogger(__name__)

DEFAULT_ASSOC_CHECK_LIMIT = 512


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A group of order n on the indices 0..n-1.

    mul[a, b] is the index of a*b. All arrays are read-only after construction.
    """
    order: int
    mul: np.ndarray
    identity: int
    inverse: np.ndarray
    elt_order: np.ndarray
    label: str = ""

    def product(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def power(self, a: int, t: int) -> int:
        """a**t by square-and-multiply on the table."""
        result = self.identity
        base = a
        while t > 0:
            if t & 1:
                result = int(self.mul[result, base])
            base = int(self.mul[base, base])
            t >>= 1
        return result

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def center_size(self) -> int:
        commuting = np.all(self.mul == self.mul.T, axis=0)
        return int(np.count_nonzero(commuting))

    def to_table(self) -> list[list[int]]:
        return self.mul.tolist()

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label or '?'}, order={self.order})"


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def from_cayley_table(
    table,
    check_associativity: bool | None = None,
    assoc_check_limit: int = DEFAULT_ASSOC_CHECK_LIMIT,
    label: str = "",
) -> FiniteGroup:
    """Validate a Cayley table and build the group.

    The identity is detected, not assumed to sit at index 0.

    Args:
        table: n x n matrix of indices in 0..n-1.
        check_associativity: True forces the O(n^3) scan, False skips it,
            None scans only when n <= assoc_check_limit.
        assoc_check_limit: Largest order scanned when check_associativity is None.
        label: Display name carried on the group.
    """
    try:
        mul = np.array(table, dtype=np.intp)
    except (ValueError, TypeError) as e:
        raise InvalidGroupTable(f"Cayley table is not a rectangular integer matrix: {e}") from None
    if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
        raise InvalidGroupTable(f"Cayley table must be a non-empty square matrix, got shape {mul.shape}")
    n = mul.shape[0]
    if mul.min() < 0 or mul.max() >= n:
        bad = np.argwhere((mul < 0) | (mul >= n))[0]
        raise InvalidGroupTable(f"Entry at row {bad[0]}, column {bad[1]} is outside 0..{n - 1}")

    _check_latin(mul)
    identity = _find_identity(mul)
    inverse = _find_inverses(mul, identity)

    if check_associativity is None:
        check_associativity = n <= assoc_check_limit
        if not check_associativity:
            logger.warning(f"Skipping associativity scan for order {n} > {assoc_check_limit}")
    if check_associativity:
        _check_associative(mul)

    return _freeze(mul, identity, inverse, label)


def group_from_trusted_table(mul: np.ndarray, label: str = "") -> FiniteGroup:
    """Build a group from a table produced by a constructor known to be correct."""
    mul = np.ascontiguousarray(mul, dtype=np.intp)
    identity = _find_identity(mul)
    inverse = np.argmax(mul == identity, axis=1).astype(np.intp)
    return _freeze(mul, identity, inverse, label)


def _freeze(mul: np.ndarray, identity: int, inverse: np.ndarray, label: str) -> FiniteGroup:
    orders = all_element_orders(mul, identity)
    for arr in (mul, inverse, orders):
        arr.setflags(write=False)
    logger.debug(f"Built group {label or '?'} of order {mul.shape[0]}")
    return FiniteGroup(
        order=mul.shape[0],
        mul=mul,
        identity=identity,
        inverse=inverse,
        elt_order=orders,
        label=label,
    )


def _check_latin(mul: np.ndarray) -> None:
    n = mul.shape[0]
    expected = np.arange(n)
    bad_rows = np.flatnonzero(~np.all(np.sort(mul, axis=1) == expected, axis=1))
    if bad_rows.size:
        raise NotLatinSquare(f"Row {bad_rows[0]} is not a permutation of 0..{n - 1}")
    bad_cols = np.flatnonzero(~np.all(np.sort(mul, axis=0) == expected[:, None], axis=0))
    if bad_cols.size:
        raise NotLatinSquare(f"Column {bad_cols[0]} is not a permutation of 0..{n - 1}")


def _find_identity(mul: np.ndarray) -> int:
    n = mul.shape[0]
    expected = np.arange(n)
    left = np.all(mul == expected, axis=1)
    right = np.all(mul.T == expected, axis=1)
    candidates = np.flatnonzero(left & right)
    if candidates.size == 0:
        raise NoIdentity("No element acts as a two-sided identity")
    return int(candidates[0])


def _find_inverses(mul: np.ndarray, identity: int) -> np.ndarray:
    # Latin rows guarantee exactly one right inverse per element.
    inverse = np.argmax(mul == identity, axis=1).astype(np.intp)
    n = mul.shape[0]
    left_ok = mul[inverse, np.arange(n)] == identity
    if not np.all(left_ok):
        raise NoInverse(int(np.flatnonzero(~left_ok)[0]))
    return inverse


def _check_associative(mul: np.ndarray) -> None:
    for a in range(mul.shape[0]):
        left = mul[mul[a]]       # [b, c] -> (ab)c
        right = mul[a][mul]      # [b, c] -> a(bc)
        if not np.array_equal(left, right):
            b, c = np.argwhere(left != right)[0]
            raise NotAssociative(a, int(b), int(c))


# ---------------------------------------------------------------------------
# Element orders
# ---------------------------------------------------------------------------

def element_order(group: FiniteGroup, a: int) -> int:
    """Least t >= 1 with a**t = identity.

    Starts from t = n and strips prime factors while a**(t/p) is still the identity.
    """
    t = group.order
    for p, e in factorize(group.order).factors:
        for _ in range(e):
            if group.power(a, t // p) != group.identity:
                break
            t //= p
    return t


def all_element_orders(mul: np.ndarray, identity: int) -> np.ndarray:
    """Vectorized divisor descent over every element at once."""
    n = mul.shape[0]
    elements = np.arange(n, dtype=np.intp)
    t = np.full(n, n, dtype=np.intp)
    for p, e in factorize(n).factors:
        active = np.ones(n, dtype=bool)
        for _ in range(e):
            candidate = t // p
            hits = active & (_power_all(mul, identity, elements, candidate) == identity)
            t = np.where(hits, candidate, t)
            active = hits
            if not active.any():
                break
    return t


def _power_all(mul: np.ndarray, identity: int, base: np.ndarray, exps: np.ndarray) -> np.ndarray:
    result = np.full(base.shape, identity, dtype=np.intp)
    exps = exps.copy()
    while np.any(exps > 0):
        odd = (exps & 1).astype(bool)
        result = np.where(odd, mul[result, base], result)
        base = mul[base, base]
        exps >>= 1
    return result


# ---------------------------------------------------------------------------
# Sylow structure
# ---------------------------------------------------------------------------

def sylow_subgroup_elements(group: FiniteGroup, p: int) -> list[int]:
    """Elements whose order is a power of p.

    This is the Sylow p-subgroup exactly when that subgroup is normal.
    """
    orders = group.elt_order
    return [a for a in range(group.order) if _is_power_of(int(orders[a]), p)]


def is_nilpotent(group: FiniteGroup) -> bool:
    """True when every Sylow subgroup is unique.

    Equivalent test: for each prime p, the p-power-order elements number
    exactly the p-part of |G|.
    """
    for p, e in factorize(group.order).factors:
        if len(sylow_subgroup_elements(group, p)) != p**e:
            return False
    return True


def _is_power_of(x: int, p: int) -> bool:
    while x % p == 0:
        x //= p
    return x == 1


def restrict_to_subgroup(group: FiniteGroup, elements: list[int], label: str = "") -> FiniteGroup:
    """The subgroup on the given elements, reindexed by their ascending order."""
    members = np.array(sorted(elements), dtype=np.intp)
    position = np.full(group.order, -1, dtype=np.intp)
    position[members] = np.arange(members.size)
    sub = position[group.mul[np.ix_(members, members)]]
    if np.any(sub < 0):
        raise InvalidParameters(f"Elements {members.tolist()} are not closed under multiplication")
    return group_from_trusted_table(sub, label=label)
