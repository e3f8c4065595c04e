"""Markdown text for reports, theorem checks, scans and bijections."""

from ..harness.verifier import BijectionRun
from ..models import GroupReport, Infeasible, ScanFinding, TheoremReport
from ..bijection import residue_order


def markdown_table(headers: list[str], rows: list[list[str]], right_align: set[int] | None = None) -> str:
    """Build a GitHub-flavored Markdown table.

    Args:
        headers: Column header names.
        rows: Cell strings per row; short rows are padded.
        right_align: Indices of numeric columns.
    """
    right_align = right_align or set()
    separators = ["---:" if i in right_align else "---" for i in range(len(headers))]
    lines = [
        "| " + " | ".join(_escape_pipes(h) for h in headers) + " |",
        "| " + " | ".join(separators) + " |",
    ]
    for row in rows:
        padded = [_escape_pipes(str(cell)) for cell in row] + [""] * (len(headers) - len(row))
        lines.append("| " + " | ".join(padded[:len(headers)]) + " |")
    return "\n".join(lines)


def generate_group_report(report: GroupReport) -> str:
    summary = markdown_table(
        ["Metric", "Value"],
        [
            ["Order", str(report.order)],
            ["Cyclic subgroups", str(report.cyclic_subgroups)],
            ["Edges (Hasse diagram)", str(report.edges_hasse)],
            ["Edges (element-order sum)", str(report.edges_formula)],
            ["Agreement", "yes" if report.agreement else "NO"],
        ],
    )
    histogram = markdown_table(
        ["Element order", "Elements"],
        [[str(d), str(c)] for d, c in sorted(report.histogram.entries.items())],
        right_align={0, 1},
    )
    return f"""# {report.label}

{summary}

## Order histogram

{histogram}
"""


def generate_theorem_report(report: TheoremReport) -> str:
    rows = markdown_table(
        ["Group", "Edges", "Cyclic", "Nilpotent", "Histogram"],
        [
            [r.label, str(r.edges), _yes(r.cyclic), _yes(r.nilpotent), r.histogram_digest]
            for r in report.rows
        ],
        right_align={1},
    )
    coverage = "complete" if report.complete else "catalog groups only (incomplete)"
    content = f"""# Order {report.order}

**Z_{report.order} edges:** {report.cyclic_edges}
**Minimum edges:** {report.min_edges}
**Witnesses:** {", ".join(report.witnesses)}
**Verdict:** {report.verdict}
**Coverage:** {coverage}

{rows}
"""
    if report.odd_equality_shape:
        content += f"\n_Order {report.order} has the form 3p^a with p >= 5._\n"
    if report.violations:
        content += "\n## Violations\n\n" + "\n".join(f"- {v}" for v in report.violations) + "\n"
    return content


def generate_scan_report(findings: list[ScanFinding], summary: dict[str, int]) -> str:
    rows = markdown_table(
        ["Order", "Verdict", "Min edges", "Z_n edges", "Complete", "Non-cyclic witnesses"],
        [
            [
                str(f.order), str(f.verdict), str(f.min_edges), str(f.cyclic_edges),
                _yes(f.complete), ", ".join(f.witnesses),
            ]
            for f in findings
        ],
        right_align={0, 2, 3},
    )
    totals = markdown_table(
        ["Count", "Value"],
        [[key, str(value)] for key, value in summary.items()],
        right_align={1},
    )
    return f"""# Conjecture scan

{rows}

## Summary

{totals}
"""


def generate_bijection_report(label: str, run: BijectionRun) -> str:
    n = run.group.order
    if isinstance(run.result, Infeasible):
        return f"""# {label}: no bijection

Orders {run.result.orders} hold {run.result.demand} elements but admit only
{run.result.capacity} residues of Z_{n}.
"""

    flow = markdown_table(
        ["Order in G", "Order in Z_n", "Elements"],
        [[str(d), str(dp), str(c)] for (d, dp), c in run.result.class_flow.items()],
        right_align={0, 1, 2},
    )
    pairs = "\n".join(
        f"{a} -> {r}  ({int(run.group.elt_order[a])} | {residue_order(n, r)})"
        for a, r in enumerate(run.result.mapping)
    )
    status = "valid" if run.verdict.valid else f"INVALID at element {run.verdict.first_violation}: {run.verdict.reason}"
    content = f"""# {label}: order-divisibility bijection to Z_{n}

**Verification:** {status}

## Class flow

{flow}

## Mapping

```
{pairs}
```
"""
    if n % 2:
        dominance = "holds" if run.dominance_violation is None else f"fails at element {run.dominance_violation}"
        content += f"\n**Ratio dominance (odd order):** {dominance}\n"
    return content


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _escape_pipes(text: str) -> str:
    return str(text).replace("|", "\\|")
