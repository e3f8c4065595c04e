"""Exception hierarchy for group construction, arithmetic and lattice checks."""


class GroupTheoryError(ValueError):
    """Base for domain errors caused by bad input (CLI exit status 1)."""


class InvalidGroupTable(GroupTheoryError):
    """A Cayley table failed one of the group axioms."""


class NotLatinSquare(InvalidGroupTable):
    pass


class NotAssociative(InvalidGroupTable):
    def __init__(self, a: int, b: int, c: int):
        self.triple = (a, b, c)
        super().__init__(f"Table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")


class NoIdentity(InvalidGroupTable):
    pass


class NoInverse(InvalidGroupTable):
    def __init__(self, element: int):
        self.element = element
        super().__init__(f"Element {element} has no two-sided inverse")


class NotAPermutation(GroupTheoryError):
    pass


class ClosureBoundExceeded(GroupTheoryError):
    def __init__(self, bound: int):
        self.bound = bound
        super().__init__(f"Group order exceeds the closure bound of {bound} elements")


class InvalidParameters(GroupTheoryError):
    pass


class GroupFileError(GroupTheoryError):
    """Malformed Cayley or permutation file."""

    def __init__(self, path: str, line: int, message: str):
        self.path = path
        self.line = line
        super().__init__(f"{path}:{line}: {message}")


class SpecSyntaxError(GroupTheoryError):
    pass


class OrderOutOfRange(GroupTheoryError):
    pass


class NotCoprime(GroupTheoryError):
    pass


class LatticeInvariantError(RuntimeError):
    """An internal cross-check failed. This means the implementation is wrong."""


class ShortcutMismatch(LatticeInvariantError):
    pass


class DownDegreeMismatch(LatticeInvariantError):
    pass


class NonIntegerSum(LatticeInvariantError):
    pass
