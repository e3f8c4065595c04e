"""Exact integer arithmetic: factorization, omega, totient and the edge-count formulas."""

import logging
from fractions import Fraction
from functools import lru_cache
from math import prod

from ..models import EqualityClass, Factorization, RatioComparison, Relation

logger = logging.getLogger(__name__)

MAX_FACTOR_INPUT = 2**63 - 1


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    """Factor n by trial division. factorize(1) has no factors.

    Args:
        n: Integer in 1..2**63-1. Trial division is only practical up to about 2**40.
    """
    if n < 1 or n > MAX_FACTOR_INPUT:
        raise ValueError(f"factorize() needs 1 <= n <= 2**63-1, got {n}")

    factors: list[tuple[int, int]] = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if rest > 1:
        factors.append((rest, 1))

    return Factorization(factors=tuple(factors), value=n)


def divisors(n: int) -> list[int]:
    """All positive divisors of n in ascending order."""
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def omega_phi(d: int) -> tuple[int, int]:
    """Return (number of distinct prime divisors, Euler totient) of d."""
    f = factorize(d)
    phi = prod((p - 1) * p ** (e - 1) for p, e in f.factors)
    return len(f.factors), phi


def euler_phi(d: int) -> int:
    return omega_phi(d)[1]


@lru_cache(maxsize=4096)
def ratio(d: int) -> Fraction:
    """omega(d)/phi(d) as a reduced fraction; ratio(1) == 0."""
    w, phi = omega_phi(d)
    return Fraction(w, phi)


def is_prime_power(n: int) -> bool:
    return len(factorize(n).factors) == 1


def cyclic_edge_count(n: int) -> int:
    """Edges of the cyclic subgroup graph of Z_n, via the exponent closed form.

    With n = p_1^n_1 ... p_k^n_k this is sum_i n_i * prod_{j != i} (n_j + 1),
    which keeps the whole evaluation in integers.
    """
    exps = factorize(n).exponents
    total = 0
    for i, e in enumerate(exps):
        total += e * prod(x + 1 for j, x in enumerate(exps) if j != i)
    return total


def _equality_shape(d: int, d_prime: int) -> EqualityClass:
    if d == d_prime:
        return EqualityClass.SAME_VALUE
    f = factorize(d)
    if len(f.factors) == 1 and f.factors[0][0] >= 5 and d_prime == 3 * d:
        return EqualityClass.PRIME_POWER_TIMES_3
    return EqualityClass.NOT_EQUAL


def compare_divisor_ratios(d: int, d_prime: int) -> RatioComparison:
    """Compare ratio(d) and ratio(d') for odd d | d' with d >= 3.

    Inputs outside that domain get an OutOfDomain verdict instead of an error,
    since even inputs are probed deliberately.
    """
    if d < 3 or d_prime < 1 or d % 2 == 0 or d_prime % 2 == 0 or d_prime % d != 0:
        return RatioComparison(relation=Relation.OUT_OF_DOMAIN)

    left, right = ratio(d), ratio(d_prime)
    if left > right:
        return RatioComparison(Relation.STRICT_GREATER, EqualityClass.NOT_EQUAL, left, right)
    if left < right:
        logger.error(f"ratio({d}) < ratio({d_prime}) for odd d | d'")
        return RatioComparison(Relation.STRICT_LESS, EqualityClass.NOT_EQUAL, left, right)

    shape = _equality_shape(d, d_prime)
    if shape is EqualityClass.NOT_EQUAL:
        logger.error(f"ratio({d}) == ratio({d_prime}) outside the characterized equality cases")
    return RatioComparison(Relation.EQUAL, shape, left, right)


def even_multiple_gap(d: int) -> tuple[Fraction, Fraction]:
    """Return (ratio(d), ratio(2d)). For odd d the second is strictly larger."""
    return ratio(d), ratio(2 * d)
