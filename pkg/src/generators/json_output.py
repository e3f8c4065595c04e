"""Machine-readable JSON documents with stable field names."""

import json

from ..models import GroupReport, ScanFinding, TheoremReport


def report_document(report: GroupReport) -> dict:
    return {
        "order": report.order,
        "label": report.label,
        "histogram": {str(d): c for d, c in sorted(report.histogram.entries.items())},
        "cyclic_subgroups": report.cyclic_subgroups,
        "edges_hasse": report.edges_hasse,
        "edges_formula": report.edges_formula,
        "agreement": report.agreement,
    }


def theorem_document(report: TheoremReport) -> dict:
    return {
        "order": report.order,
        "cyclic_edges": report.cyclic_edges,
        "rows": [
            {
                "label": r.label,
                "edges_hasse": r.edges,
                "histogram_digest": r.histogram_digest,
                "cyclic": r.cyclic,
                "nilpotent": r.nilpotent,
            }
            for r in report.rows
        ],
        "min_edges": report.min_edges,
        "witnesses": report.witnesses,
        "complete": report.complete,
        "verdict": str(report.verdict),
        "violations": report.violations,
        "odd_equality_shape": report.odd_equality_shape,
    }


def finding_document(finding: ScanFinding) -> dict:
    return {
        "order": finding.order,
        "verdict": str(finding.verdict),
        "witnesses": finding.witnesses,
        "complete": finding.complete,
        "cyclic_edges": finding.cyclic_edges,
        "min_edges": finding.min_edges,
        "violations": finding.violations,
    }


def scan_document(findings: list[ScanFinding]) -> list[dict]:
    return [finding_document(f) for f in findings]


def error_document(error: Exception) -> dict:
    return {"error": str(error), "kind": type(error).__name__}


def dumps(document: dict | list, indent: int = 2) -> str:
    return json.dumps(document, indent=indent, ensure_ascii=False) + "\n"
