"""Connected components of relative PSL(2,R) representation spaces.

Everything here is exact: Euler numbers and fractional rotations are
``Fraction`` values and the component data are integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import InvalidSignature, NotAdmissible, NotDegenerate
from .kinds import ClassKind


@dataclass(frozen=True)
class BoundarySpec:
    """Conjugacy class prescribed at one puncture."""

    kind: ClassKind
    frac_rot: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", ClassKind(self.kind))
        if self.kind is ClassKind.ELLIPTIC:
            if self.frac_rot is None:
                raise InvalidSignature("elliptic class needs a fractional rotation")
            r = Fraction(self.frac_rot)
            if not 0 < r < 1:
                raise InvalidSignature(f"elliptic rotation {r} must lie strictly in (0, 1)")
            object.__setattr__(self, "frac_rot", r)
        elif self.frac_rot is not None:
            raise InvalidSignature(f"{self.kind.value} class carries no rotation")

    @classmethod
    def identity(cls) -> "BoundarySpec":
        return cls(ClassKind.IDENTITY)

    @classmethod
    def elliptic(cls, r) -> "BoundarySpec":
        return cls(ClassKind.ELLIPTIC, Fraction(r))

    @classmethod
    def hyperbolic(cls) -> "BoundarySpec":
        return cls(ClassKind.HYPERBOLIC)

    @classmethod
    def positive_unipotent(cls) -> "BoundarySpec":
        return cls(ClassKind.POSITIVE_UNIPOTENT)

    @classmethod
    def negative_unipotent(cls) -> "BoundarySpec":
        return cls(ClassKind.NEGATIVE_UNIPOTENT)


def frac_rot_of_spec(spec: BoundarySpec) -> Fraction:
    return spec.frac_rot if spec.kind is ClassKind.ELLIPTIC else Fraction(0)


def _dual_spec(spec: BoundarySpec) -> BoundarySpec:
    if spec.kind is ClassKind.ELLIPTIC:
        return BoundarySpec.elliptic(1 - spec.frac_rot)
    if spec.kind is ClassKind.POSITIVE_UNIPOTENT:
        return BoundarySpec.negative_unipotent()
    if spec.kind is ClassKind.NEGATIVE_UNIPOTENT:
        return BoundarySpec.positive_unipotent()
    return spec


@dataclass(frozen=True)
class Signature:
    """Genus of the closed surface plus one boundary class per puncture."""

    genus: int
    specs: tuple[BoundarySpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "specs", tuple(self.specs))
        if self.genus < 0:
            raise InvalidSignature("genus must be nonnegative")
        if self.punctured_euler_char >= 0:
            raise InvalidSignature(
                f"punctured surface of genus {self.genus} with {self.n} punctures "
                "is not hyperbolic"
            )

    @property
    def n(self) -> int:
        return len(self.specs)

    @property
    def euler_char(self) -> int:
        """Euler characteristic of the closed surface."""
        return 2 - 2 * self.genus

    @property
    def punctured_euler_char(self) -> int:
        return 2 - 2 * self.genus - self.n

    def indices(self, kind: ClassKind) -> frozenset[int]:
        return frozenset(i for i, s in enumerate(self.specs) if s.kind is kind)

    def count(self, kind: ClassKind) -> int:
        return sum(1 for s in self.specs if s.kind is kind)

    @property
    def s0(self) -> int:
        return self.count(ClassKind.IDENTITY)

    @property
    def s_minus(self) -> int:
        return self.count(ClassKind.NEGATIVE_UNIPOTENT)

    @property
    def s_plus(self) -> int:
        return self.count(ClassKind.POSITIVE_UNIPOTENT)

    @property
    def total_frac_rot(self) -> Fraction:
        return sum((frac_rot_of_spec(s) for s in self.specs), Fraction(0))

    def replace(self, i: int, spec: BoundarySpec) -> "Signature":
        specs = list(self.specs)
        specs[i] = spec
        return Signature(self.genus, tuple(specs))


@dataclass(frozen=True)
class ComponentDescriptor:
    """Topology of one component: an affine bundle over a symmetric product.

    The base is Sym^base_sym_degree of the surface with the punctures in
    ``base_removed`` deleted; the fibre is an affine space of complex
    dimension ``bundle_rank`` from which ``removed_subbundles`` affine
    hyperplane subbundles are deleted.
    """

    euler: Fraction
    m: int
    base_sym_degree: int
    base_removed: frozenset[int]
    bundle_rank: int
    removed_subbundles: int
    smooth: bool
    closure_variant: bool

    @property
    def compact(self) -> bool:
        base_compact = self.base_sym_degree == 0 or not self.base_removed
        return self.bundle_rank == 0 and self.removed_subbundles == 0 and base_compact

    @property
    def complex_dimension(self) -> int:
        return self.bundle_rank + self.base_sym_degree


def _require_punctured(sig: Signature) -> None:
    if sig.n == 0:
        raise InvalidSignature("closed surfaces are handled by closed_component")


def euler_set(sig: Signature) -> list[Fraction]:
    """Positive Euler numbers of nonempty components, increasing."""
    _require_punctured(sig)
    shift = sig.total_frac_rot + sig.s0 + sig.s_minus
    top = -sig.punctured_euler_char
    # e = k - shift for integers k with shift < k <= top; the upper bound is
    # exactly the nonnegativity of the base degree
    k = shift.__floor__() + 1
    out = []
    while k <= top:
        out.append(Fraction(k) - shift)
        k += 1
    return out


def describe_component(sig: Signature, e, closure: bool = False) -> ComponentDescriptor:
    e = Fraction(e)
    if e not in euler_set(sig):
        raise NotAdmissible(f"no component with Euler number {e} for this signature")
    m = -sig.punctured_euler_char - e - sig.total_frac_rot
    assert m.denominator == 1 and m >= 0
    m = int(m)
    s0, s_minus, s_plus = sig.s0, sig.s_minus, sig.s_plus
    base = m - s0 - s_minus
    rank = 3 * sig.genus - 3 + sig.n - m + s_minus
    hyp = sig.indices(ClassKind.HYPERBOLIC)
    if closure:
        removed = hyp
        subbundles = 0
        smooth = not (s_minus > 0 or (s_plus > 0 and base >= 1))
    else:
        removed = hyp | sig.indices(ClassKind.POSITIVE_UNIPOTENT)
        subbundles = s_minus
        smooth = True
    return ComponentDescriptor(
        euler=e,
        m=m,
        base_sym_degree=base,
        base_removed=removed,
        bundle_rank=rank,
        removed_subbundles=subbundles,
        smooth=smooth,
        closure_variant=closure,
    )


def components(sig: Signature, closure: bool = False) -> list[ComponentDescriptor]:
    return [describe_component(sig, e, closure) for e in euler_set(sig)]


@dataclass(frozen=True)
class DegenerateInclusion:
    """How the component with puncture i made trivial sits inside the closure.

    ``kind`` is "preimage" (over p_i + Sym^(k-1)) for a positive unipotent
    and "subbundle" (codimension-one affine subbundle) for a negative one.
    ``degenerate_nonempty`` says whether that smaller component exists.
    """

    kind: str
    base_shift: int
    rank_shift: int
    degenerate_nonempty: bool


def degenerate_inclusion(sig: Signature, i: int, e) -> DegenerateInclusion:
    kind = sig.specs[i].kind
    if not kind.is_unipotent:
        raise NotDegenerate(f"puncture {i} is {kind.value}, not unipotent")
    nonempty = Fraction(e) in euler_set(sig.replace(i, BoundarySpec.identity()))
    if kind is ClassKind.POSITIVE_UNIPOTENT:
        return DegenerateInclusion("preimage", -1, 0, nonempty)
    return DegenerateInclusion("subbundle", 0, -1, nonempty)


def closed_component(g: int, e) -> ComponentDescriptor:
    """Component of the closed-surface representation space with Euler number e."""
    if g < 2:
        raise InvalidSignature("closed surface must have genus at least 2")
    e = Fraction(e)
    if e.denominator != 1 or not 0 < e <= 2 * g - 2:
        raise NotAdmissible(f"Euler number {e} outside 1..{2 * g - 2}")
    m = 2 * g - 2 - int(e)
    return ComponentDescriptor(
        euler=e,
        m=m,
        base_sym_degree=m,
        base_removed=frozenset(),
        bundle_rank=3 * g - 3 - m,
        removed_subbundles=0,
        smooth=True,
        closure_variant=False,
    )


def rep_dimension(g: int, n: int, dim_g: int, class_dims: Iterable[int]) -> int:
    """Real dimension of the (relative) representation space."""
    class_dims = list(class_dims)
    if len(class_dims) != n:
        raise ValueError("need one class dimension per puncture")
    if 2 - 2 * g - n >= 0:
        raise InvalidSignature("punctured surface is not hyperbolic")
    return -(2 - 2 * g) * dim_g + sum(class_dims)


def class_dimension(spec: BoundarySpec) -> int:
    return 0 if spec.kind is ClassKind.IDENTITY else 2


def dualize(sig: Signature) -> Signature:
    return Signature(sig.genus, tuple(_dual_spec(s) for s in sig.specs))
