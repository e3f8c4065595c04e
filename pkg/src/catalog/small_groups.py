"""Named small groups per order, with an honest completeness flag.

Orders 1..15 are complete. Beyond that an order is complete only when it is
p, p^2 or pq (p < q primes); there the classification is: the abelian groups,
plus one nonabelian Z_q ⋊ Z_p when p | q - 1 (the dihedral group when p = 2).

Entries of one order are pairwise non-isomorphic. Order histograms separate
them, except where an abelian and a nonabelian entry share a histogram
(e.g. Ab[4,4] and Dic2xZ2 at order 16); the abelian flag and the center
order then tell them apart.
"""

import hashlib
import logging
from functools import lru_cache
from itertools import product

from ..errors import OrderOutOfRange
from ..groups import FiniteGroup, construct_family
from ..models import (
    Abelian, Alternating, CatalogEntry, Cyclic, Dicyclic, Dihedral, GroupSpec,
    Product, SemidirectCyclic, Symmetric,
)
from ..numtheory import factorize

logger = logging.getLogger(__name__)

MAX_CATALOG_ORDER = 200

# Number of isomorphism classes for each order up to 15.
KNOWN_CLASS_COUNTS = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5,
    9: 2, 10: 2, 11: 1, 12: 5, 13: 1, 14: 2, 15: 1,
}

_PERMUTATION_GROUPS = {
    12: [Alternating(4)],
    24: [Symmetric(4)],
    60: [Alternating(5)],
    120: [Symmetric(5)],
}


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------

def groups_of_order(n: int, max_order: int = MAX_CATALOG_ORDER) -> list[CatalogEntry]:
    """All catalog groups of order n; complete_for_order says whether that is every class."""
    if n < 1 or n > max_order:
        raise OrderOutOfRange(f"Catalog covers orders 1..{max_order}, got {n}")
    return list(_entries(n))


def is_complete_order(n: int) -> bool:
    if n <= 15:
        return True
    exps = factorize(n).exponents
    return exps in ([1], [2], [1, 1])


@lru_cache(maxsize=None)
def build_group(spec: GroupSpec) -> FiniteGroup:
    """Construct a catalog group once and reuse it."""
    return construct_family(spec)


def histogram_digest(group: FiniteGroup) -> str:
    """Short stable hash of the order histogram."""
    counts: dict[int, int] = {}
    for o in group.elt_order:
        counts[int(o)] = counts.get(int(o), 0) + 1
    text = ",".join(f"{d}:{c}" for d, c in sorted(counts.items()))
    return hashlib.sha256(text.encode()).hexdigest()[:12]


def fingerprint(group: FiniteGroup) -> tuple[str, bool, int]:
    """(histogram digest, abelian, center order): distinct within each catalog order."""
    return histogram_digest(group), group.is_abelian(), group.center_size()


def abelian_invariant_factors(n: int) -> list[tuple[int, ...]]:
    """Invariant factor lists d_1 >= d_2 >= ... (d_{i+1} | d_i) of every abelian group of order n."""
    per_prime = []
    for p, e in factorize(n).factors:
        per_prime.append([(p, part) for part in _partitions(e)])

    results = []
    for choice in product(*per_prime):
        width = max((len(part) for _, part in choice), default=1)
        factors = [1] * width
        for p, part in choice:
            for i, k in enumerate(part):
                factors[i] *= p**k
        results.append(tuple(factors))
    return sorted(results, key=lambda f: (len(f), [-x for x in f]))


# ---------------------------------------------------------------------------
# Entry construction
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _entries(n: int) -> tuple[CatalogEntry, ...]:
    complete = is_complete_order(n)
    specs: list[tuple[GroupSpec, bool]] = []

    for factors in abelian_invariant_factors(n):
        spec = Cyclic(n) if len(factors) == 1 else Abelian(factors)
        specs.append((spec, True))

    if n % 2 == 0 and n // 2 >= 3:
        m = n // 2
        specs.append((Dihedral(m), _is_power_of_two(m)))

    for spec in _PERMUTATION_GROUPS.get(n, []):
        specs.append((spec, False))

    if n % 4 == 0 and n // 4 >= 2:
        m = n // 4
        specs.append((Dicyclic(m), _is_power_of_two(m)))

    semidirect = _odd_pq_semidirect(n)
    if semidirect is not None:
        specs.append((semidirect, False))

    specs.extend(_products(n))

    entries = tuple(
        CatalogEntry(spec=spec, label=spec.label, complete_for_order=complete, nilpotent=nilpotent)
        for spec, nilpotent in specs
    )
    logger.debug(f"Catalog order {n}: {len(entries)} entries, complete={complete}")
    return entries


def _products(n: int) -> list[tuple[GroupSpec, bool]]:
    """Nonabelian direct products: D4 x Z_k and Q8 x Z_k (nilpotent), D3 x Z_k for gcd(k, 6) = 1."""
    found = []
    if n % 8 == 0 and n // 8 >= 2:
        k = n // 8
        found.append((Product((Dihedral(4), Cyclic(k))), True))
        found.append((Product((Dicyclic(2), Cyclic(k))), True))
    if n % 6 == 0 and n // 6 >= 5 and (n // 6) % 2 and (n // 6) % 3:
        found.append((Product((Dihedral(3), Cyclic(n // 6))), False))
    return found


def _odd_pq_semidirect(n: int) -> SemidirectCyclic | None:
    """The nonabelian Z_q ⋊ Z_p for n = pq with p odd and p | q - 1."""
    f = factorize(n).factors
    if len(f) != 2 or f[0][1] != 1 or f[1][1] != 1:
        return None
    (p, _), (q, _) = f
    if p == 2 or (q - 1) % p:
        return None
    k = next(k for k in range(2, q) if pow(k, p, q) == 1)
    return SemidirectCyclic(q, p, k)


def _partitions(e: int, largest: int | None = None) -> list[tuple[int, ...]]:
    if largest is None:
        largest = e
    if e == 0:
        return [()]
    parts = []
    for first in range(min(e, largest), 0, -1):
        for rest in _partitions(e - first, first):
            parts.append((first,) + rest)
    return parts


def _is_power_of_two(m: int) -> bool:
    return m & (m - 1) == 0
