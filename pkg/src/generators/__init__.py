from .dot import generate_cyclic_graph_dot
from .json_output import (
    report_document, theorem_document, scan_document, error_document, dumps,
)
from .report_text import (
    generate_group_report, generate_theorem_report, generate_scan_report,
    generate_bijection_report,
)
