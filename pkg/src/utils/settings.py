"""Settings for group construction limits and scan execution."""

import json
import logging
from dataclasses import dataclass
from pathlib import Path

logger = logging.getLogger(__name__)

DEFAULT_SETTINGS_PATH = Path(".cyclic_graph.json")


@dataclass(frozen=True)
class HarnessSettings:
    """Limits and execution options. CLI flags override values loaded from file."""

    # Largest group a permutation closure or product may produce (tables are O(n^2)).
    closure_bound: int = 20000

    # Cayley files up to this order get the full associativity scan.
    assoc_check_limit: int = 512

    # None: scan up to assoc_check_limit; False: never scan.
    check_associativity: bool | None = None

    max_catalog_order: int = 200
    scan_workers: int = 4
    json_indent: int = 2


def load_settings(path: Path | None = None) -> HarnessSettings:
    """Load settings from a JSON file. Returns defaults if the file is missing.

    Unknown keys are ignored. Invalid values fall back to their default.
    """
    settings_path = path or DEFAULT_SETTINGS_PATH
    if settings_path.exists():
        try:
            data = json.loads(settings_path.read_text(encoding="utf-8"))
            known = {f for f in HarnessSettings.__dataclass_fields__}
            filtered = {k: v for k, v in data.items() if k in known}
            return HarnessSettings(**_checked(filtered, settings_path))
        except (json.JSONDecodeError, TypeError, AttributeError) as e:
            logger.warning(f"Failed to load settings from {settings_path}: {e}")
    return HarnessSettings()


def _checked(values: dict, source: Path) -> dict:
    checked = {}
    for key, value in values.items():
        if key == "check_associativity":
            valid = value is None or isinstance(value, bool)
        else:
            # bool is an int subclass; true/false are not counts
            valid = isinstance(value, int) and not isinstance(value, bool) and value >= 0
        if valid:
            checked[key] = value
        else:
            default = HarnessSettings.__dataclass_fields__[key].default
            logger.warning(f"Ignoring {key}={value!r} in {source}; using default {default!r}")
    return checked
