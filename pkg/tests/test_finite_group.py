import numpy as np
import pytest

from conftest import NON_ASSOCIATIVE_LOOP, brute_force_order
from src.errors import InvalidGroupTable, InvalidParameters, NoIdentity, NotAssociative, NotLatinSquare
from src.groups import (
    construct_family, element_order, from_cayley_table, is_nilpotent,
    restrict_to_subgroup, sylow_subgroup_elements,
)
from src.models import Cyclic, Dicyclic, Dihedral


class TestFromCayleyTable:
    def test_trivial_group(self):
        g = from_cayley_table([[0]])
        assert g.order == 1
        assert g.identity == 0
        assert g.elt_order.tolist() == [1]

    def test_z2(self):
        g = from_cayley_table([[0, 1], [1, 0]])
        assert g.order == 2
        assert g.elt_order.tolist() == [1, 2]

    def test_identity_not_at_index_zero(self):
        # Z3 with the identity stored at index 2.
        table = [[1, 2, 0], [2, 0, 1], [0, 1, 2]]
        g = from_cayley_table(table)
        assert g.identity == 2
        assert g.elt_order.tolist() == [3, 3, 1]

    def test_non_associative_loop_rejected(self):
        with pytest.raises(NotAssociative) as exc:
            from_cayley_table(NON_ASSOCIATIVE_LOOP)
        a, b, c = exc.value.triple
        t = NON_ASSOCIATIVE_LOOP
        assert t[t[a][b]][c] != t[a][t[b][c]]

    def test_skip_associativity_accepts_loop(self):
        g = from_cayley_table(NON_ASSOCIATIVE_LOOP, check_associativity=False)
        assert g.order == 5

    def test_assoc_limit_skips_scan(self, caplog):
        g = from_cayley_table(NON_ASSOCIATIVE_LOOP, assoc_check_limit=4)
        assert g.order == 5
        assert "Skipping associativity scan" in caplog.text

    def test_row_not_latin(self):
        with pytest.raises(NotLatinSquare, match="Row 0"):
            from_cayley_table([[0, 0], [1, 1]])

    def test_column_not_latin(self):
        with pytest.raises(NotLatinSquare, match="Column 0"):
            from_cayley_table([[0, 1], [0, 1]])

    def test_no_identity(self):
        # x*y = -x-y mod 3 is a Latin square without identity.
        with pytest.raises(NoIdentity):
            from_cayley_table([[0, 2, 1], [2, 1, 0], [1, 0, 2]])

    @pytest.mark.parametrize("table", [
        [[0, 1], [1]],
        [[0, 1, 2], [1, 2, 0]],
        [[0, 5], [5, 0]],
        [],
    ])
    def test_malformed_tables(self, table):
        with pytest.raises(InvalidGroupTable):
            from_cayley_table(table)

    def test_caller_array_stays_writable(self):
        table = np.array([[0, 1], [1, 0]])
        from_cayley_table(table)
        table[0, 0] = 0
        assert table.flags.writeable

    def test_arrays_are_read_only(self):
        g = from_cayley_table([[0, 1], [1, 0]])
        with pytest.raises(ValueError):
            g.mul[0, 0] = 1


class TestTableRoundTrip:
    def test_catalog_tables_validate(self, catalog):
        for entry, group in catalog:
            rebuilt = from_cayley_table(group.to_table(), check_associativity=False)
            assert rebuilt.identity == group.identity, entry.label
            assert np.array_equal(rebuilt.elt_order, group.elt_order), entry.label
            assert np.array_equal(rebuilt.inverse, group.inverse), entry.label

    def test_small_tables_pass_associativity_scan(self, catalog):
        for entry, group in catalog:
            if group.order <= 64:
                rebuilt = from_cayley_table(group.to_table(), check_associativity=True)
                assert rebuilt.order == group.order, entry.label


class TestElementOrder:
    def test_identity_has_order_one(self, z12):
        assert element_order(z12, z12.identity) == 1

    def test_generator_of_z12(self, z12):
        assert element_order(z12, 1) == 12

    def test_central_involution_of_dic3(self):
        g = construct_family(Dicyclic(3))
        # a^3 with a of order 6.
        assert element_order(g, 3) == 2

    def test_power(self, z12):
        assert z12.power(5, 7) == 35 % 12
        assert z12.power(5, 0) == z12.identity

    def test_descent_matches_naive_iteration(self, catalog):
        for entry, group in catalog:
            naive = [brute_force_order(group, a) for a in range(group.order)]
            assert group.elt_order.tolist() == naive, entry.label
            if group.order <= 24:
                assert [element_order(group, a) for a in range(group.order)] == naive


class TestSylow:
    def test_nilpotent_flags_match_catalog(self, catalog):
        for entry, group in catalog:
            assert is_nilpotent(group) == entry.nilpotent, entry.label

    def test_sylow_of_d3_is_not_normal(self):
        d3 = construct_family(Dihedral(3))
        assert len(sylow_subgroup_elements(d3, 2)) == 4
        assert not is_nilpotent(d3)

    def test_restrict_to_sylow(self):
        g = construct_family(Cyclic(12))
        sub = restrict_to_subgroup(g, sylow_subgroup_elements(g, 2))
        assert sub.order == 4
        assert sorted(sub.elt_order.tolist()) == [1, 2, 4, 4]

    def test_restrict_rejects_non_subgroup(self):
        g = construct_family(Cyclic(6))
        with pytest.raises(InvalidParameters, match="not closed"):
            restrict_to_subgroup(g, [0, 1])


def test_abelian_and_center():
    d4 = construct_family(Dihedral(4))
    assert not d4.is_abelian()
    assert d4.center_size() == 2
    assert construct_family(Cyclic(7)).is_abelian()
