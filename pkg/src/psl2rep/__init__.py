"""Invariants of surface-group representations into PSL(2,R) and their Higgs-bundle counterparts."""

from .components import BoundarySpec, ComponentDescriptor, Signature
from .errors import DomainError, Psl2RepError, SchemaError
from .kinds import ClassKind
from .lift import IsometryClass, LiftedIsometry, Mat2, Representation

__all__ = [
    "BoundarySpec",
    "ClassKind",
    "ComponentDescriptor",
    "DomainError",
    "IsometryClass",
    "LiftedIsometry",
    "Mat2",
    "Psl2RepError",
    "Representation",
    "SchemaError",
    "Signature",
]
