"""Cyclic subgroups, the Hasse diagram of C(G), and its edge counts."""

import logging
from fractions import Fraction
from math import gcd, prod

import networkx as nx

from ..errors import (
    DownDegreeMismatch, InvalidParameters, NonIntegerSum, NotCoprime, ShortcutMismatch,
)
from ..groups import FiniteGroup, is_nilpotent, restrict_to_subgroup, sylow_subgroup_elements
from ..models import CyclicPoset, CyclicSubgroup
from ..numtheory import factorize, is_prime_power, omega_phi, ratio

logger = logging.getLogger(__name__)


def cyclic_subgroups(group: FiniteGroup) -> list[CyclicSubgroup]:
    """Every cyclic subgroup once, sorted by (order, least generator)."""
    assigned = [False] * group.order
    mul = group.mul
    subs: list[CyclicSubgroup] = []

    for a in range(group.order):
        if assigned[a]:
            continue
        powers = [group.identity]
        x = a
        while x != group.identity:
            powers.append(x)
            x = int(mul[x, a])
        o = len(powers)
        # a^k generates <a> exactly when gcd(k, o) = 1; a is the least of them.
        for k in range(1, o + 1):
            if gcd(k, o) == 1:
                assigned[powers[k % o]] = True
        subs.append(CyclicSubgroup(elements=tuple(sorted(powers)), min_generator=a))

    subs.sort(key=lambda s: (s.order, s.min_generator))
    logger.debug(f"{group.label or 'group'}: {len(subs)} cyclic subgroups")
    return subs


def hasse_cover_edges(subs: list[CyclicSubgroup]) -> CyclicPoset:
    """Cover relation of the containment order on subs.

    Covers come from a transitive reduction of the containment DAG and are
    cross-checked against the prime-index rule: inside a cyclic group, H is
    maximal in K exactly when |K : H| is prime.
    """
    sets = [frozenset(s.elements) for s in subs]
    containment = nx.DiGraph()
    containment.add_nodes_from(range(len(subs)))
    shortcut: set[tuple[int, int]] = set()

    for i, low in enumerate(subs):
        for j, high in enumerate(subs):
            if high.order <= low.order or high.order % low.order:
                continue
            if sets[i] < sets[j]:
                containment.add_edge(i, j)
                if _is_prime(high.order // low.order):
                    shortcut.add((i, j))

    generic = set(nx.transitive_reduction(containment).edges())
    if generic != shortcut:
        i, j = min(generic ^ shortcut)
        raise ShortcutMismatch(
            f"Cover check disagrees on subgroups {i} (order {subs[i].order}) "
            f"and {j} (order {subs[j].order})"
        )

    return CyclicPoset(subgroups=list(subs), cover_edges=sorted(generic))


def cyclic_poset(group: FiniteGroup) -> CyclicPoset:
    return hasse_cover_edges(cyclic_subgroups(group))


def edge_count_hasse(group: FiniteGroup) -> int:
    """Number of cover edges; also checks each vertex has omega(|H|) lower covers."""
    poset = cyclic_poset(group)
    down = [0] * len(poset.subgroups)
    for _, j in poset.cover_edges:
        down[j] += 1
    for j, sub in enumerate(poset.subgroups):
        w, _ = omega_phi(sub.order)
        if down[j] != w:
            raise DownDegreeMismatch(
                f"Cyclic subgroup {j} of order {sub.order} has {down[j]} lower covers, expected {w}"
            )
    return len(poset.cover_edges)


def edge_count_formula(group: FiniteGroup) -> int:
    """Sum of omega(o(a))/phi(o(a)) over all elements, in exact rationals."""
    total = Fraction(0)
    for o in group.elt_order:
        total += ratio(int(o))
    if total.denominator != 1:
        raise NonIntegerSum(f"{group.label or 'group'}: element sum is {total}, not an integer")
    return total.numerator


def coprime_product_edge_count(gs: list[FiniteGroup]) -> int:
    """Edges of C(G_1 x ... x G_k)* for groups of pairwise coprime orders.

    Evaluated as sum_i |E_i| * prod_{j != i} |C_j|.
    """
    for i in range(len(gs)):
        for j in range(i + 1, len(gs)):
            if gcd(gs[i].order, gs[j].order) != 1:
                raise NotCoprime(
                    f"Orders {gs[i].order} and {gs[j].order} "
                    f"(factors {i} and {j}) share a prime"
                )

    vertices = []
    edges = []
    for g in gs:
        poset = cyclic_poset(g)
        vertices.append(len(poset.subgroups))
        edges.append(len(poset.cover_edges))

    return sum(
        e * prod(c for j, c in enumerate(vertices) if j != i)
        for i, e in enumerate(edges)
    )


def sylow_product_edge_count(group: FiniteGroup) -> int:
    """Edge count of a nilpotent group assembled from its Sylow subgroups."""
    if not is_nilpotent(group):
        raise InvalidParameters(
            f"{group.label or 'group'}: not nilpotent, Sylow subgroups do not form a direct product"
        )
    sylows = [
        restrict_to_subgroup(group, sylow_subgroup_elements(group, p), label=f"Syl{p}")
        for p in factorize(group.order).primes
    ]
    return coprime_product_edge_count(sylows)


def p_group_edge_identity(group: FiniteGroup) -> bool:
    """For a p-group, |E(C(G)*)| == |C(G)| - 1: each nontrivial cyclic subgroup has one maximal subgroup."""
    if group.order > 1 and not is_prime_power(group.order):
        raise InvalidParameters(f"Order {group.order} is not a prime power")
    poset = cyclic_poset(group)
    return len(poset.cover_edges) == len(poset.subgroups) - 1


def _is_prime(n: int) -> bool:
    f = factorize(n).factors
    return len(f) == 1 and f[0][1] == 1
