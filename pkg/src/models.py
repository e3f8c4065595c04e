"""Data models for groups, cyclic subgroup posets and verification results."""

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__

        @staticmethod
        def _generate_next_value_(name, start, count, last_values):
            return name.lower()


# ---------------------------------------------------------------------------
# Group specifications
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Cyclic:
    """Z_n."""
    n: int

    @property
    def label(self) -> str:
        return f"Z{self.n}"


@dataclass(frozen=True)
class Abelian:
    """Direct product of cyclic groups of the given orders."""
    factors: tuple[int, ...]

    @property
    def label(self) -> str:
        return f"Ab[{','.join(str(f) for f in self.factors)}]"


@dataclass(frozen=True)
class Dihedral:
    """D_n, the symmetries of an n-gon (order 2n)."""
    n: int

    @property
    def label(self) -> str:
        return f"D{self.n}"


@dataclass(frozen=True)
class Dicyclic:
    """Dic_n, order 4n. Dic_2 is the quaternion group.

    alias keeps the user's spelling (e.g. "Q8") for labels and is ignored by equality.
    """
    n: int
    alias: str = field(default="", compare=False)

    @property
    def label(self) -> str:
        return self.alias or f"Dic{self.n}"


@dataclass(frozen=True)
class Symmetric:
    k: int

    @property
    def label(self) -> str:
        return f"S{self.k}"


@dataclass(frozen=True)
class Alternating:
    k: int

    @property
    def label(self) -> str:
        return f"A{self.k}"


@dataclass(frozen=True)
class SemidirectCyclic:
    """Z_m ⋊ Z_n where the generator of Z_n acts by x -> k*x."""
    m: int
    n: int
    k: int

    @property
    def label(self) -> str:
        return f"SD[{self.m},{self.n},{self.k}]"


@dataclass(frozen=True)
class Product:
    factors: tuple["GroupSpec", ...]

    @property
    def label(self) -> str:
        return "x".join(f.label for f in self.factors)


@dataclass(frozen=True)
class CayleyFile:
    path: Path

    @property
    def label(self) -> str:
        return f"@{self.path}"


@dataclass(frozen=True)
class PermFile:
    path: Path

    @property
    def label(self) -> str:
        return f"@{self.path}"


GroupSpec = (
    Cyclic | Abelian | Dihedral | Dicyclic | Symmetric | Alternating
    | SemidirectCyclic | Product | CayleyFile | PermFile
)


# ---------------------------------------------------------------------------
# Number theory
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    """Prime factorization with primes in strictly increasing order."""
    factors: tuple[tuple[int, int], ...]
    value: int

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    @property
    def exponents(self) -> list[int]:
        return [e for _, e in self.factors]


class Relation(StrEnum):
    STRICT_GREATER = "StrictGreater"
    EQUAL = "Equal"
    # Only reachable in-domain if the inequality were false.
    STRICT_LESS = "StrictLess"
    OUT_OF_DOMAIN = "OutOfDomain"


class EqualityClass(StrEnum):
    NOT_EQUAL = "NotEqual"
    SAME_VALUE = "SameValue"
    PRIME_POWER_TIMES_3 = "PrimePowerTimes3"


@dataclass(frozen=True)
class RatioComparison:
    relation: Relation
    equality_class: EqualityClass = EqualityClass.NOT_EQUAL
    left: Fraction | None = None
    right: Fraction | None = None


# ---------------------------------------------------------------------------
# Cyclic subgroup poset
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CyclicSubgroup:
    """A cyclic subgroup as a sorted tuple of element indices."""
    elements: tuple[int, ...]
    min_generator: int

    @property
    def order(self) -> int:
        return len(self.elements)


@dataclass
class CyclicPoset:
    """Vertices of C(G) in canonical order plus the cover edges (lower, upper)."""
    subgroups: list[CyclicSubgroup]
    cover_edges: list[tuple[int, int]] = field(default_factory=list)

    def lower_covers(self, j: int) -> list[int]:
        return [i for i, k in self.cover_edges if k == j]

    def vertex_names(self) -> list[str]:
        """Names of the form C{order}#{rank within order}."""
        names = []
        rank: dict[int, int] = {}
        for sub in self.subgroups:
            r = rank.get(sub.order, 0)
            rank[sub.order] = r + 1
            names.append(f"C{sub.order}#{r}")
        return names


# ---------------------------------------------------------------------------
# Order bijection
# ---------------------------------------------------------------------------

@dataclass
class OrderHistogram:
    """Map from element order to the number of elements of that order."""
    entries: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def as_text(self) -> str:
        return ",".join(f"{d}:{c}" for d, c in sorted(self.entries.items()))


@dataclass
class OrderBijection:
    """mapping[a] is the residue of Z_n paired with element a."""
    mapping: list[int]
    class_flow: dict[tuple[int, int], int] = field(default_factory=dict)


@dataclass
class Infeasible:
    """No saturating flow exists. The certificate violates Hall's condition."""
    orders: list[int]
    demand: int
    capacity: int


@dataclass
class BijectionVerdict:
    valid: bool
    first_violation: int | None = None
    reason: str = ""


# ---------------------------------------------------------------------------
# Catalog and harness results
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    spec: GroupSpec
    label: str
    complete_for_order: bool
    nilpotent: bool


class Verdict(StrEnum):
    MINIMUM_IS_CYCLIC_ONLY = "MinimumIsCyclicOnly"
    MINIMUM_SHARED_WITH_NON_CYCLIC = "MinimumSharedWithNonCyclic"
    MINIMUM_BELOW_CYCLIC = "MinimumBelowCyclic"


@dataclass
class GroupReport:
    label: str
    order: int
    histogram: OrderHistogram
    cyclic_subgroups: int
    edges_hasse: int
    edges_formula: int

    @property
    def agreement(self) -> bool:
        return self.edges_hasse == self.edges_formula


@dataclass
class TheoremRow:
    label: str
    edges: int
    histogram_digest: str
    cyclic: bool
    nilpotent: bool


@dataclass
class TheoremReport:
    order: int
    cyclic_edges: int
    rows: list[TheoremRow]
    min_edges: int
    witnesses: list[str]
    complete: bool
    verdict: Verdict
    violations: list[str] = field(default_factory=list)
    odd_equality_shape: bool = False


@dataclass
class ScanFinding:
    order: int
    verdict: Verdict
    witnesses: list[str]
    complete: bool
    cyclic_edges: int
    min_edges: int
    violations: list[str] = field(default_factory=list)
