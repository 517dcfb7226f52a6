"""Exception hierarchy shared by every module.

Domain errors (bad mathematical input) derive from ``DomainError``; the CLI
maps them to exit code 1. ``SchemaError`` covers malformed input documents
and maps to exit code 2.
"""


class Psl2RepError(Exception):
    pass


class DomainError(Psl2RepError):
    pass


class AmbiguousClass(DomainError):
    pass


class RelationViolation(DomainError):
    pass


class InvalidSignature(DomainError):
    pass


class NotAdmissible(DomainError):
    pass


class NotDegenerate(DomainError):
    pass


class IncompatibleInput(DomainError):
    pass


class EmptyStratum(DomainError):
    pass


class InvalidCrossing(DomainError):
    pass


class ExcludedCase(DomainError):
    pass


class UnmappedClass(DomainError):
    pass


class NotHyperbolizable(DomainError):
    pass


class NotFound(DomainError):
    pass


class NoMaximalSigns(DomainError):
    pass


class SchemaError(Psl2RepError):
    """Input document failed validation; ``pointer`` is a JSON pointer."""

    def __init__(self, message: str, pointer: str = ""):
        super().__init__(message)
        self.pointer = pointer
