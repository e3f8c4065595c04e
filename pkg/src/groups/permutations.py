"""Permutation groups generated by breadth-first closure."""

import logging
from collections import deque

import numpy as np

from ..errors import ClosureBoundExceeded, NotAPermutation
from .finite_group import FiniteGroup, group_from_trusted_table

logger = logging.getLogger(__name__)

DEFAULT_CLOSURE_BOUND = 20000


def from_permutation_generators(
    degree: int,
    gens: list[list[int]],
    closure_bound: int = DEFAULT_CLOSURE_BOUND,
    label: str = "",
) -> FiniteGroup:
    """Generate the group spanned by permutations of 0..degree-1.

    Elements are indexed in breadth-first discovery order starting from the
    identity, so the same generators always give the same table. The product
    a*b is composition: (a*b)[i] = a[b[i]].
    """
    if degree < 1:
        raise NotAPermutation(f"Degree must be positive, got {degree}")
    generators = [_as_permutation(g, degree, i) for i, g in enumerate(gens)]

    identity = np.arange(degree, dtype=np.int32)
    elements = [identity]
    index = {identity.tobytes(): 0}
    queue = deque([identity])

    while queue:
        x = queue.popleft()
        for g in generators:
            y = x[g]
            key = y.tobytes()
            if key in index:
                continue
            if len(elements) >= closure_bound:
                raise ClosureBoundExceeded(closure_bound)
            index[key] = len(elements)
            elements.append(y)
            queue.append(y)

    logger.debug(f"Permutation closure on {degree} points reached {len(elements)} elements")

    perms = np.stack(elements)
    n = len(elements)
    mul = np.empty((n, n), dtype=np.intp)
    for a in range(n):
        composed = perms[a][perms]
        mul[a] = [index[row.tobytes()] for row in composed]

    return group_from_trusted_table(mul, label=label)


def _as_permutation(images: list[int], degree: int, position: int) -> np.ndarray:
    arr = np.asarray(images, dtype=np.int32)
    if arr.shape != (degree,) or not np.array_equal(np.sort(arr), np.arange(degree)):
        raise NotAPermutation(f"Generator {position} is not a permutation of 0..{degree - 1}: {list(images)}")
    return arr


def symmetric_generators(k: int) -> list[list[int]]:
    """A transposition and a k-cycle."""
    if k < 2:
        return []
    cycle = [(i + 1) % k for i in range(k)]
    swap = [1, 0] + list(range(2, k))
    return [swap, cycle]


def alternating_generators(k: int) -> list[list[int]]:
    """The 3-cycles (0 1 i) for i = 2..k-1."""
    gens = []
    for i in range(2, k):
        images = list(range(k))
        images[0], images[1], images[i] = 1, i, 0
        gens.append(images)
    return gens
