"""Bijections G -> Z_n with o(a) dividing o(f(a)), found by flow on order classes."""

import logging
from collections import Counter
from math import gcd

import networkx as nx

from ..groups import FiniteGroup
from ..models import BijectionVerdict, Infeasible, OrderBijection, OrderHistogram
from ..numtheory import divisors, euler_phi, factorize, ratio

logger = logging.getLogger(__name__)

SOURCE = "source"
SINK = "sink"


def order_histogram(group: FiniteGroup) -> OrderHistogram:
    counts = Counter(int(o) for o in group.elt_order)
    return OrderHistogram(entries=dict(sorted(counts.items())))


def cyclic_histogram(n: int) -> OrderHistogram:
    """Z_n has phi(d) elements of order d for every d | n."""
    return OrderHistogram(entries={d: euler_phi(d) for d in divisors(n)})


def residue_order(n: int, r: int) -> int:
    return n // gcd(n, r)


def solve_class_flow(demand: OrderHistogram, n: int) -> dict[tuple[int, int], int] | Infeasible:
    """Route each order class of G to order classes of Z_n it divides.

    Class d may only send to class d' when d | d'. Among saturating flows the
    one with the fewest prime steps d'/d is chosen, so a cyclic group is
    matched class to itself.
    """
    supply = cyclic_histogram(n).entries
    if not demand.entries:
        return {}
    network = nx.DiGraph()
    for d, count in demand.entries.items():
        network.add_edge(SOURCE, ("g", d), capacity=count, weight=0)
        for d_prime in supply:
            if d_prime % d == 0:
                # No capacity attribute: unbounded, so min cuts only cross source/sink edges.
                network.add_edge(("g", d), ("z", d_prime), weight=_prime_steps(d_prime // d))
    for d_prime, phi in supply.items():
        network.add_edge(("z", d_prime), SINK, capacity=phi, weight=0)

    flow = nx.max_flow_min_cost(network, SOURCE, SINK)
    value = sum(flow[SOURCE].values())
    if value < demand.total:
        return _hall_certificate(network, demand, supply)

    class_flow = {}
    for d in demand.entries:
        for node, amount in flow[("g", d)].items():
            if amount:
                class_flow[(d, node[1])] = amount
    return dict(sorted(class_flow.items()))


def find_order_bijection(group: FiniteGroup) -> OrderBijection | Infeasible:
    """Pair every element with a residue of Z_n whose order its own order divides.

    Within matched classes, elements and residues are paired in ascending index order.
    """
    n = group.order
    result = solve_class_flow(order_histogram(group), n)
    if isinstance(result, Infeasible):
        logger.error(
            f"{group.label or 'group'}: no order-divisibility bijection; "
            f"orders {result.orders} need {result.demand} but only {result.capacity} fit"
        )
        return result

    elements_by_order: dict[int, list[int]] = {}
    for a in range(n):
        elements_by_order.setdefault(int(group.elt_order[a]), []).append(a)
    residues_by_order: dict[int, list[int]] = {}
    for r in range(n):
        residues_by_order.setdefault(residue_order(n, r), []).append(r)

    mapping = [-1] * n
    element_pos = Counter()
    residue_pos = Counter()
    for (d, d_prime), amount in result.items():
        start_e, start_r = element_pos[d], residue_pos[d_prime]
        chunk_e = elements_by_order[d][start_e:start_e + amount]
        chunk_r = residues_by_order[d_prime][start_r:start_r + amount]
        for a, r in zip(chunk_e, chunk_r):
            mapping[a] = r
        element_pos[d] += amount
        residue_pos[d_prime] += amount

    logger.debug(f"{group.label or 'group'}: class flow {result}")
    return OrderBijection(mapping=mapping, class_flow=result)


def verify_order_bijection(group: FiniteGroup, f: OrderBijection) -> BijectionVerdict:
    """Check the permutation property and o(a) | o(f(a)) element by element."""
    n = group.order
    if len(f.mapping) != n:
        return BijectionVerdict(False, None, f"mapping has {len(f.mapping)} entries, expected {n}")

    seen: set[int] = set()
    for a, r in enumerate(f.mapping):
        if not 0 <= r < n:
            return BijectionVerdict(False, a, f"element {a} maps to {r}, outside Z_{n}")
        if r in seen:
            return BijectionVerdict(False, a, f"residue {r} is used twice")
        seen.add(r)

    for a, r in enumerate(f.mapping):
        o_a = int(group.elt_order[a])
        o_r = residue_order(n, r)
        if o_r % o_a:
            return BijectionVerdict(False, a, f"o({a}) = {o_a} does not divide o({r}) = {o_r} in Z_{n}")

    return BijectionVerdict(True)


def odd_ratio_dominance(group: FiniteGroup, f: OrderBijection) -> int | None:
    """First element a with ratio(o(a)) < ratio(o(f(a))), or None.

    For groups of odd order this is expected to be None.
    """
    n = group.order
    for a, r in enumerate(f.mapping):
        if ratio(int(group.elt_order[a])) < ratio(residue_order(n, r)):
            return a
    return None


def _hall_certificate(network: nx.DiGraph, demand: OrderHistogram, supply: dict[int, int]) -> Infeasible:
    _, (reachable, _) = nx.minimum_cut(network, SOURCE, SINK)
    orders = sorted(node[1] for node in reachable if isinstance(node, tuple) and node[0] == "g")
    admissible = {d_prime for d_prime in supply for d in orders if d_prime % d == 0}
    return Infeasible(
        orders=orders,
        demand=sum(demand.entries[d] for d in orders),
        capacity=sum(supply[d_prime] for d_prime in admissible),
    )


def _prime_steps(m: int) -> int:
    return sum(e for _, e in factorize(m).factors)
