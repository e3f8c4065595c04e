from itertools import combinations
from math import gcd

import pytest

from src.errors import InvalidParameters, NotCoprime
from src.groups import construct_family, direct_product, from_cayley_table
from src.lattice import (
    coprime_product_edge_count, cyclic_poset, cyclic_subgroups, edge_count_formula,
    edge_count_hasse, hasse_cover_edges, p_group_edge_identity, sylow_product_edge_count,
)
from src.models import Abelian, Alternating, Cyclic, Dicyclic, Dihedral, Product
from src.numtheory import cyclic_edge_count, euler_phi, factorize, is_prime_power


def brute_force_cyclic_subgroups(group) -> set[frozenset[int]]:
    subs = set()
    for a in range(group.order):
        powers = {group.identity}
        x = a
        while x != group.identity:
            powers.add(x)
            x = group.product(x, a)
        subs.add(frozenset(powers))
    return subs


class TestCyclicSubgroups:
    def test_trivial_group(self):
        subs = cyclic_subgroups(from_cayley_table([[0]]))
        assert [s.elements for s in subs] == [(0,)]

    @pytest.mark.parametrize("p, k", [(2, 3), (3, 2), (5, 1), (2, 6)])
    def test_prime_power_chain(self, p, k):
        assert len(cyclic_subgroups(construct_family(Cyclic(p**k)))) == k + 1

    def test_s3(self, s3):
        subs = cyclic_subgroups(s3)
        assert len(subs) == 5
        assert [s.order for s in subs] == [1, 2, 2, 2, 3]
        assert {frozenset(s.elements) for s in subs} == brute_force_cyclic_subgroups(s3)

    def test_canonical_order(self, q8):
        subs = cyclic_subgroups(q8)
        keys = [(s.order, s.min_generator) for s in subs]
        assert keys == sorted(keys)
        for s in subs:
            assert s.min_generator == min(a for a in s.elements if q8.elt_order[a] == s.order)


class TestHasse:
    def test_cyclic_prime(self):
        poset = cyclic_poset(construct_family(Cyclic(7)))
        assert poset.cover_edges == [(0, 1)]

    def test_z12(self, z12):
        poset = cyclic_poset(z12)
        assert len(poset.subgroups) == 6
        assert len(poset.cover_edges) == 7

    def test_quaternion(self, q8):
        poset = cyclic_poset(q8)
        orders = [s.order for s in poset.subgroups]
        assert orders == [1, 2, 4, 4, 4]
        assert poset.cover_edges == [(0, 1), (1, 2), (1, 3), (1, 4)]
        assert poset.lower_covers(3) == [1]

    def test_vertex_names(self, z12):
        names = cyclic_poset(z12).vertex_names()
        assert names == ["C1#0", "C2#0", "C3#0", "C4#0", "C6#0", "C12#0"]

    def test_reuses_given_subgroups(self, s3):
        subs = cyclic_subgroups(s3)
        poset = hasse_cover_edges(subs)
        assert poset.subgroups == subs
        assert len(poset.cover_edges) == 4


class TestEdgeCounts:
    @pytest.mark.parametrize("spec, edges", [
        (Cyclic(12), 7),
        (Alternating(4), 7),
        (Dicyclic(3), 7),
        (Product((Cyclic(3), Cyclic(3))), 4),
        (Cyclic(6), 4),
        (Dihedral(4), 6),
        (Dicyclic(2), 4),
        (Cyclic(8), 3),
        (Abelian((4, 2)), 5),
        (Abelian((2, 2, 2)), 7),
        (Cyclic(1), 0),
    ])
    def test_examples_both_ways(self, spec, edges):
        g = construct_family(spec)
        assert edge_count_hasse(g) == edges
        assert edge_count_formula(g) == edges

    def test_formula_equals_hasse_on_catalog(self, catalog):
        assert len(catalog) >= 60
        for entry, group in catalog:
            assert edge_count_formula(group) == edge_count_hasse(group), entry.label

    def test_partition_identity_on_catalog(self, catalog):
        for entry, group in catalog:
            subs = cyclic_subgroups(group)
            assert sum(euler_phi(s.order) for s in subs) == group.order, entry.label

    def test_cyclic_subgroups_match_brute_force_on_small_catalog(self, catalog):
        for entry, group in catalog:
            if group.order > 60:
                continue
            found = {frozenset(s.elements) for s in cyclic_subgroups(group)}
            assert found == brute_force_cyclic_subgroups(group), entry.label


class TestCoprimeProducts:
    def test_z4_z3(self):
        gs = [construct_family(Cyclic(4)), construct_family(Cyclic(3))]
        assert coprime_product_edge_count(gs) == 7 == cyclic_edge_count(12)

    def test_s3_z5(self, s3):
        z5 = construct_family(Cyclic(5))
        expected = edge_count_hasse(direct_product([s3, z5]))
        assert coprime_product_edge_count([s3, z5]) == expected

    def test_shared_prime(self):
        z2 = construct_family(Cyclic(2))
        with pytest.raises(NotCoprime):
            coprime_product_edge_count([z2, z2])

    def test_single_factor(self, q8):
        assert coprime_product_edge_count([q8]) == 4

    def test_catalog_pairs_up_to_400(self, catalog):
        by_order: dict[int, list] = {}
        for entry, group in catalog:
            by_order.setdefault(group.order, []).append(group)
        checked = 0
        for a, b in combinations(sorted(by_order), 2):
            if a == 1 or a * b > 400 or gcd(a, b) != 1:
                continue
            for g in by_order[a]:
                for h in by_order[b]:
                    direct = edge_count_hasse(direct_product([g, h]))
                    assert coprime_product_edge_count([g, h]) == direct, (g.label, h.label)
                    checked += 1
        assert checked > 100


class TestSylowAndPGroups:
    def test_sylow_decomposition_on_nilpotent_catalog(self, catalog):
        for entry, group in catalog:
            if entry.nilpotent and group.order <= 120:
                assert sylow_product_edge_count(group) == edge_count_hasse(group), entry.label

    def test_sylow_decomposition_rejects_non_nilpotent(self):
        with pytest.raises(InvalidParameters, match="D3: not nilpotent"):
            sylow_product_edge_count(construct_family(Dihedral(3)))

    def test_p_group_identity(self, catalog):
        for entry, group in catalog:
            if group.order > 1 and is_prime_power(group.order):
                assert p_group_edge_identity(group), entry.label
                k = factorize(group.order).exponents[0]
                vertices = len(cyclic_subgroups(group))
                assert vertices >= k + 1
                assert (vertices == k + 1) == isinstance(entry.spec, Cyclic), entry.label

    def test_p_group_identity_rejects_mixed_order(self, z12):
        with pytest.raises(InvalidParameters):
            p_group_edge_identity(z12)
