"""Parsers for Cayley-table and permutation-generator files."""

import logging
from pathlib import Path

from ..errors import GroupFileError
from .finite_group import DEFAULT_ASSOC_CHECK_LIMIT, FiniteGroup, from_cayley_table
from .permutations import DEFAULT_CLOSURE_BOUND, from_permutation_generators

logger = logging.getLogger(__name__)

CAYLEY_SUFFIX = ".cayley"
PERMS_SUFFIX = ".perms"


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------

def detect_file_kind(path: str | Path) -> str:
    """Return 'cayley', 'perms' or 'unknown' from the file suffix."""
    suffix = Path(path).suffix.lower()
    if suffix == CAYLEY_SUFFIX:
        return "cayley"
    if suffix == PERMS_SUFFIX:
        return "perms"
    return "unknown"


def load_cayley_file(
    path: str | Path,
    check_associativity: bool | None = None,
    assoc_check_limit: int = DEFAULT_ASSOC_CHECK_LIMIT,
) -> FiniteGroup:
    """Read a Cayley table file: a line with n, then n rows of n integers."""
    p = Path(path)
    logger.info(f"Reading Cayley table: {p}")
    table = parse_cayley_text(_read(p), str(p))
    return from_cayley_table(table, check_associativity, assoc_check_limit, label=f"@{p}")


def load_perm_file(path: str | Path, closure_bound: int = DEFAULT_CLOSURE_BOUND) -> FiniteGroup:
    """Read a permutation file: a line with the degree d, then one generator per line."""
    p = Path(path)
    logger.info(f"Reading permutation generators: {p}")
    degree, gens = parse_perm_text(_read(p), str(p))
    return from_permutation_generators(degree, gens, closure_bound, label=f"@{p}")


def parse_cayley_text(text: str, source: str = "<text>") -> list[list[int]]:
    lines = _content_lines(text)
    if not lines:
        raise GroupFileError(source, 1, "empty file")
    n = _parse_count(lines[0], source)

    if len(lines) - 1 < n:
        raise GroupFileError(source, len(lines) + 1, f"expected {n} table rows, found {len(lines) - 1}")
    if len(lines) - 1 > n:
        raise GroupFileError(source, n + 2, "trailing content after the table")

    table = []
    for row_no, line in enumerate(lines[1:], start=2):
        row = _parse_ints(line, source, row_no)
        if len(row) != n:
            raise GroupFileError(source, row_no, f"expected {n} entries, found {len(row)}")
        table.append(row)
    return table


def parse_perm_text(text: str, source: str = "<text>") -> tuple[int, list[list[int]]]:
    lines = _content_lines(text)
    if not lines:
        raise GroupFileError(source, 1, "empty file")
    degree = _parse_count(lines[0], source)

    gens = []
    for line_no, line in enumerate(lines[1:], start=2):
        images = _parse_ints(line, source, line_no)
        if len(images) != degree:
            raise GroupFileError(source, line_no, f"expected {degree} images, found {len(images)}")
        gens.append(images)
    return degree, gens


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _read(path: Path) -> str:
    if not path.is_file():
        raise FileNotFoundError(f"Group file not found: {path}")
    return path.read_text(encoding="utf-8")


def _content_lines(text: str) -> list[str]:
    """Lines with trailing blank lines dropped. Blank lines inside the body are kept."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    return lines


def _parse_count(line: str, source: str) -> int:
    tokens = line.split()
    if len(tokens) != 1 or not tokens[0].isdigit() or int(tokens[0]) < 1:
        raise GroupFileError(source, 1, f"expected a single positive integer, found {line!r}")
    return int(tokens[0])


def _parse_ints(line: str, source: str, line_no: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise GroupFileError(source, line_no, f"non-integer entry in {line!r}") from None
