import pytest

from src.catalog import groups_of_order
from src.errors import OrderOutOfRange
from src.groups import parse_group_spec
from src.harness import build_report, run_bijection, scan, summarize, verify_theorem
from src.lattice import edge_count_hasse
from src.models import Alternating, Cyclic, SemidirectCyclic, Verdict
from src.numtheory import cyclic_edge_count, is_prime_power
from src.utils.settings import HarnessSettings


class TestBuildReport:
    @pytest.mark.parametrize("text, order, edges", [
        ("Z12", 12, 7),
        ("Dic3", 12, 7),
        ("Z3xZ3", 9, 4),
        ("A4", 12, 7),
    ])
    def test_examples(self, text, order, edges):
        report = build_report(parse_group_spec(text), HarnessSettings())
        assert report.label == text
        assert report.order == order
        assert report.edges_hasse == report.edges_formula == edges
        assert report.agreement

    def test_histogram_and_vertices(self):
        report = build_report(Cyclic(12), HarnessSettings())
        assert report.cyclic_subgroups == 6
        assert report.histogram.entries == {1: 1, 2: 1, 3: 2, 4: 2, 6: 2, 12: 4}


class TestVerifyTheorem:
    def test_order_twelve(self):
        report = verify_theorem(12)
        assert report.cyclic_edges == 7
        assert report.min_edges == 7
        assert report.witnesses == ["Z12", "A4", "Dic3"]
        assert report.verdict is Verdict.MINIMUM_SHARED_WITH_NON_CYCLIC
        assert report.complete
        assert report.violations == []

    def test_order_nine(self):
        report = verify_theorem(9)
        assert [(r.label, r.edges) for r in report.rows] == [("Z9", 2), ("Ab[3,3]", 4)]
        assert report.verdict is Verdict.MINIMUM_IS_CYCLIC_ONLY

    def test_order_eight(self):
        report = verify_theorem(8)
        edges = {r.label: r.edges for r in report.rows}
        assert edges == {"Z8": 3, "Ab[4,2]": 5, "Ab[2,2,2]": 7, "D4": 6, "Dic2": 4}
        assert report.verdict is Verdict.MINIMUM_IS_CYCLIC_ONLY
        assert all(r.nilpotent for r in report.rows)

    def test_order_six_ties_with_s3(self):
        report = verify_theorem(6)
        assert report.witnesses == ["Z6", "D3"]
        assert report.verdict is Verdict.MINIMUM_SHARED_WITH_NON_CYCLIC

    def test_trivial_order(self):
        report = verify_theorem(1)
        assert report.cyclic_edges == 0
        assert report.min_edges == 0
        assert report.verdict is Verdict.MINIMUM_IS_CYCLIC_ONLY

    @pytest.mark.parametrize("n, shape", [(15, True), (75, True), (9, False), (45, False), (21, True), (12, False)])
    def test_odd_equality_shape(self, n, shape):
        assert verify_theorem(n).odd_equality_shape is shape

    def test_odd_branch(self):
        odd_orders = [n for n in range(1, 16, 2)]
        odd_orders += [n for n in range(17, 201, 2) if is_prime_power(n)]
        for n in odd_orders:
            report = verify_theorem(n)
            assert report.violations == [], n
            assert report.verdict is Verdict.MINIMUM_IS_CYCLIC_ONLY, n
            for row in report.rows:
                if not row.cyclic:
                    assert row.edges > report.cyclic_edges, row.label

    def test_nilpotent_branch(self, catalog):
        for entry, group in catalog:
            if not entry.nilpotent:
                continue
            edges = edge_count_hasse(group)
            bound = cyclic_edge_count(group.order)
            assert edges >= bound, entry.label
            assert (edges == bound) == isinstance(entry.spec, Cyclic), entry.label

    def test_out_of_range(self):
        with pytest.raises(OrderOutOfRange):
            verify_theorem(201)


class TestScan:
    def test_scan_to_fifteen(self):
        findings = scan(15)
        assert [f.order for f in findings] == list(range(1, 16))
        assert not any(f.verdict is Verdict.MINIMUM_BELOW_CYCLIC for f in findings)
        shared = {f.order for f in findings if f.verdict is Verdict.MINIMUM_SHARED_WITH_NON_CYCLIC}
        assert shared == {6, 12}
        twelve = findings[11]
        assert twelve.witnesses == ["A4", "Dic3"]

    def test_odd_only(self):
        findings = scan(15, "odd")
        assert [f.order for f in findings] == [1, 3, 5, 7, 9, 11, 13, 15]
        assert all(f.verdict is Verdict.MINIMUM_IS_CYCLIC_ONLY for f in findings)

    def test_even_only(self):
        assert [f.order for f in scan(8, "even")] == [2, 4, 6, 8]

    def test_scan_to_one(self):
        findings = scan(1)
        assert len(findings) == 1
        assert findings[0].order == 1
        assert findings[0].min_edges == 0
        assert findings[0].witnesses == []

    def test_full_catalog_has_no_counterexample(self):
        findings = scan(200, settings=HarnessSettings(scan_workers=2))
        assert not any(f.verdict is Verdict.MINIMUM_BELOW_CYCLIC for f in findings)
        assert all(f.violations == [] for f in findings)
        assert any(not f.complete for f in findings)

    def test_workers_do_not_change_results(self):
        one = scan(30, settings=HarnessSettings(scan_workers=1))
        many = scan(30, settings=HarnessSettings(scan_workers=8))
        assert one == many

    def test_bad_parity(self):
        with pytest.raises(ValueError):
            scan(10, "prime")

    def test_summary(self):
        summary = summarize(scan(15))
        assert summary == {
            "MinimumIsCyclicOnly": 13,
            "MinimumSharedWithNonCyclic": 2,
            "MinimumBelowCyclic": 0,
            "incomplete_orders": 0,
            "violations": 0,
        }


class TestRunBijection:
    def test_a4(self):
        run = run_bijection(Alternating(4), HarnessSettings())
        assert run.feasible
        assert run.verdict.valid
        assert run.dominance_violation is None

    def test_odd_semidirect(self):
        run = run_bijection(SemidirectCyclic(7, 3, 2), HarnessSettings())
        assert run.feasible and run.verdict.valid
        assert run.dominance_violation is None


def test_catalog_rows_follow_catalog_order():
    report = verify_theorem(16)
    assert [r.label for r in report.rows] == [e.label for e in groups_of_order(16)]
    assert report.rows[0].histogram_digest != report.rows[1].histogram_digest
