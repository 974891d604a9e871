"""Exception types shared across the package."""

from __future__ import annotations


class ModOrderError(Exception):
    """Base class for every error raised by this package."""


class ShapeError(ModOrderError):
    """A table is not rectangular or holds an out-of-range index."""


class AxiomViolation(ModOrderError):
    """An operation table breaks a ring or module law.

    ``law`` names the first failing axiom and ``elements`` holds the offending
    element indices (a triple for three-variable laws).
    """

    def __init__(self, law: str, elements: tuple, names: tuple | None = None):
        self.law = law
        self.elements = tuple(int(e) for e in elements)
        self.names = names
        shown = names if names is not None else self.elements
        super().__init__(f"{law} fails at {shown}")


class CapacityExceeded(ModOrderError):
    """Input is larger than the exhaustive algorithms are allowed to handle."""


class ScalarMismatch(ModOrderError):
    pass


class NotASubmodule(ModOrderError):
    pass


class PatternNotClosed(ModOrderError):
    def __init__(self, i: int, j: int, witness: tuple):
        self.i, self.j, self.witness = i, j, witness
        super().__init__(f"pattern product leaves entry set ({i},{j}) for {witness}")


class IdentityNotInPattern(ModOrderError):
    pass


class EndomorphismNotFound(ModOrderError):
    """A map that must be an endomorphism is missing from the enumerated ring."""


class NotAPartialOrder(ModOrderError):
    pass


class PreconditionUnmet(ModOrderError):
    pass


class SchemaError(ModOrderError):
    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class UnknownClaimId(ModOrderError):
    pass


class UnknownInstance(ModOrderError):
    pass
