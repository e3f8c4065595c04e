from .verifier import (
    BijectionRun, build_group_from_spec, build_report, run_bijection,
    verify_theorem, scan, summarize, PARITIES,
)
