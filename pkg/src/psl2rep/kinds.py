from enum import Enum


class ClassKind(str, Enum):
    """Conjugacy type of an element of PSL(2,R)."""

    IDENTITY = "identity"
    ELLIPTIC = "elliptic"
    HYPERBOLIC = "hyperbolic"
    POSITIVE_UNIPOTENT = "positive_unipotent"
    NEGATIVE_UNIPOTENT = "negative_unipotent"

    @property
    def is_unipotent(self) -> bool:
        return self in (ClassKind.POSITIVE_UNIPOTENT, ClassKind.NEGATIVE_UNIPOTENT)
