from pathlib import Path

import pytest

from src.errors import SpecSyntaxError
from src.groups import parse_group_spec
from src.models import (
    Abelian, Alternating, CayleyFile, Cyclic, Dicyclic, Dihedral, PermFile, Product,
    SemidirectCyclic, Symmetric,
)


@pytest.mark.parametrize("text, spec", [
    ("Z12", Cyclic(12)),
    ("D6", Dihedral(6)),
    ("Dic3", Dicyclic(3)),
    ("Q8", Dicyclic(2)),
    ("S4", Symmetric(4)),
    ("A5", Alternating(5)),
    ("Ab[6,2]", Abelian((6, 2))),
    ("SD[7,3,2]", SemidirectCyclic(7, 3, 2)),
    ("Z3xZ3", Product((Cyclic(3), Cyclic(3)))),
    ("D3xZ5xQ8", Product((Dihedral(3), Cyclic(5), Dicyclic(2)))),
    ("  Z4 ", Cyclic(4)),
    ("@tables/g.cayley", CayleyFile(Path("tables/g.cayley"))),
    ("@gens.perms", PermFile(Path("gens.perms"))),
])
def test_parse(text, spec):
    assert parse_group_spec(text) == spec


def test_labels_round_trip():
    for text in ["Z12", "D6", "Dic3", "Q8", "S4", "A5", "Ab[6,2]", "SD[7,3,2]", "Z3xZ3", "D3xQ8"]:
        assert parse_group_spec(text).label == text


@pytest.mark.parametrize("text", ["", "Z", "G12", "Z3x", "Ab[]", "SD[7,3]", "@g.txt", "z12"])
def test_syntax_errors(text):
    with pytest.raises(SpecSyntaxError):
        parse_group_spec(text)


def test_zero_parses_but_fails_later():
    # Parameter validity is a construction concern.
    assert parse_group_spec("Z0") == Cyclic(0)
