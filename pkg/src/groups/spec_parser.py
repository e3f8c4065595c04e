"""Parse terse group specs such as "Z12", "Dic3", "Ab[6,2]", "Z3xZ3" or "@table.cayley"."""

import re
from pathlib import Path

from ..errors import SpecSyntaxError
from ..models import (
    Abelian, Alternating, CayleyFile, Cyclic, Dicyclic, Dihedral, GroupSpec,
    PermFile, Product, SemidirectCyclic, Symmetric,
)
from .group_files import detect_file_kind

_ATOMS: list[tuple[re.Pattern, object]] = [
    (re.compile(r"Z(\d+)"), lambda m: Cyclic(int(m[1]))),
    (re.compile(r"Dic(\d+)"), lambda m: Dicyclic(int(m[1]))),
    (re.compile(r"D(\d+)"), lambda m: Dihedral(int(m[1]))),
    (re.compile(r"Q8"), lambda m: Dicyclic(2, alias="Q8")),
    (re.compile(r"S(\d+)"), lambda m: Symmetric(int(m[1]))),
    (re.compile(r"A(\d+)"), lambda m: Alternating(int(m[1]))),
    (re.compile(r"Ab\[(\d+(?:,\d+)*)\]"), lambda m: Abelian(tuple(int(x) for x in m[1].split(",")))),
    (re.compile(r"SD\[(\d+),(\d+),(\d+)\]"), lambda m: SemidirectCyclic(int(m[1]), int(m[2]), int(m[3]))),
]


def parse_group_spec(text: str) -> GroupSpec:
    """Parse a group spec string. Parameter validity is checked at construction."""
    text = text.strip()
    if not text:
        raise SpecSyntaxError("Empty group spec")

    if text.startswith("@"):
        path = Path(text[1:])
        kind = detect_file_kind(path)
        if kind == "cayley":
            return CayleyFile(path)
        if kind == "perms":
            return PermFile(path)
        raise SpecSyntaxError(f"Group file must end in .cayley or .perms: {text}")

    atoms = [_parse_atom(token) for token in text.split("x")]
    if len(atoms) == 1:
        return atoms[0]
    return Product(tuple(atoms))


def _parse_atom(token: str) -> GroupSpec:
    token = token.strip()
    for pattern, build in _ATOMS:
        match = pattern.fullmatch(token)
        if match:
            return build(match)
    raise SpecSyntaxError(
        f"Cannot parse group spec {token!r}. "
        f"Expected Zn, Dn, Dicn, Q8, Sn, An, Ab[a,b,...], SD[m,n,k] or x-joined products."
    )
