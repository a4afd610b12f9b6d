"""Exception types shared across the package."""

from __future__ import annotations


class SymactError(Exception):
    """Base class for every error this package raises on purpose."""


class IndexOutOfRange(SymactError):
    pass


class NotAssociative(SymactError):
    def __init__(self, a: int, b: int, c: int):
        super().__init__(f"associativity fails at ({a}, {b}, {c})")
        self.triple = (a, b, c)


class BadIdentity(SymactError):
    def __init__(self, element: int):
        super().__init__(f"identity law fails at element {element}")
        self.element = element


class SizeBoundExceeded(SymactError):
    def __init__(self, what: str, requested: int, bound: int):
        super().__init__(f"{what}: requested {requested} exceeds bound {bound}")
        self.what = what
        self.requested = requested
        self.bound = bound


class TargetNotGroup(SymactError):
    pass


class NotAGroup(SymactError):
    pass


class NotASubgroup(SymactError):
    pass


class SubmonoidMismatch(SymactError):
    pass


class MonoidMismatch(SymactError):
    pass


class CompletionMismatch(SymactError):
    pass


class IdentityLawViolated(SymactError):
    pass


class CompatibilityViolated(SymactError):
    def __init__(self, m: int, n: int, a: int):
        super().__init__(f"action compatibility fails at m={m}, n={n}, point={a}")
        self.witness = (m, n, a)


class FamilyInvalid(SymactError):
    pass


class ObjectNotFound(SymactError):
    pass


class NotEquivariant(SymactError):
    def __init__(self, s: int, a: int):
        super().__init__(f"equivariance fails at parameter {s}, state {a}")
        self.witness = (s, a)


class ShapeMismatch(SymactError):
    pass


class ParseError(SymactError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column
