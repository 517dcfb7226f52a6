"""Hyperbolic metrics with cone points, cusps and geodesic boundary.

Cone angles are rational multiples of pi and boundary lengths are rational,
so the area arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .components import BoundarySpec, Signature, frac_rot_of_spec
from .errors import ExcludedCase, InvalidSignature, NotHyperbolizable
from .kinds import ClassKind


@dataclass(frozen=True)
class BoundaryLengthSpec:
    """Local model at a puncture: "cone" (angle theta_over_pi * pi), "boundary" or "cusp"."""

    kind: str
    theta_over_pi: Fraction | None = None
    length: Fraction | None = None

    def __post_init__(self):
        if self.kind == "cone":
            theta = Fraction(self.theta_over_pi)
            if theta <= 0 or self.length is not None:
                raise InvalidSignature("cone angle must be positive")
            object.__setattr__(self, "theta_over_pi", theta)
        elif self.kind == "boundary":
            length = Fraction(self.length)
            if length <= 0 or self.theta_over_pi is not None:
                raise InvalidSignature("boundary length must be positive")
            object.__setattr__(self, "length", length)
        elif self.kind == "cusp":
            if self.theta_over_pi is not None or self.length is not None:
                raise InvalidSignature("a cusp has no parameters")
        else:
            raise InvalidSignature(f"unknown puncture type {self.kind!r}")

    @classmethod
    def cone(cls, theta_over_pi) -> "BoundaryLengthSpec":
        return cls("cone", theta_over_pi=Fraction(theta_over_pi))

    @classmethod
    def boundary(cls, length) -> "BoundaryLengthSpec":
        return cls("boundary", length=Fraction(length))

    @classmethod
    def cusp(cls) -> "BoundaryLengthSpec":
        return cls("cusp")

    @property
    def turns(self) -> Fraction:
        """theta / 2pi for cones, 0 otherwise."""
        return self.theta_over_pi / 2 if self.kind == "cone" else Fraction(0)


def gauss_bonnet_e(g: int, specs: Sequence[BoundaryLengthSpec]) -> Fraction:
    """Area over 2pi of a hyperbolic metric of the given type."""
    chi = 2 - 2 * g - len(specs)
    if g < 0 or chi >= 0:
        raise InvalidSignature("punctured surface is not hyperbolic")
    return -chi - sum((s.turns for s in specs), Fraction(0))


def length_to_class(spec: BoundaryLengthSpec) -> BoundarySpec:
    if spec.kind == "cusp":
        return BoundarySpec.positive_unipotent()
    if spec.kind == "boundary":
        return BoundarySpec.hyperbolic()
    turns = spec.turns
    if turns.denominator == 1:
        return BoundarySpec.identity()
    return BoundarySpec.elliptic(turns - turns.__floor__())


def mapped_signature(g: int, specs: Sequence[BoundaryLengthSpec]) -> Signature:
    return Signature(g, tuple(length_to_class(s) for s in specs))


@dataclass(frozen=True)
class UniformizationComponent:
    e: Fraction
    m: int
    s0: int
    rank: int
    base_degree: int
    removed_open: frozenset[int]
    removed_closure: frozenset[int]


def uniformization_component(g: int, specs: Sequence[BoundaryLengthSpec]) -> UniformizationComponent:
    """Component containing the monodromies of hyperbolic metrics of this type."""
    specs = tuple(specs)
    e = gauss_bonnet_e(g, specs)
    if e <= 0:
        raise NotHyperbolizable(f"Gauss-Bonnet area {e} is not positive")
    cones = [s for s in specs if s.kind == "cone"]
    m = sum(s.turns.__floor__() for s in cones)
    s0 = sum(1 for s in cones if s.turns.denominator == 1)
    boundary = frozenset(i for i, s in enumerate(specs) if s.kind == "boundary")
    cusps = frozenset(i for i, s in enumerate(specs) if s.kind == "cusp")
    return UniformizationComponent(
        e=e,
        m=m,
        s0=s0,
        rank=3 * g - 3 + len(specs) - m,
        base_degree=m - s0,
        removed_open=boundary | cusps,
        removed_closure=boundary,
    )


@dataclass(frozen=True)
class GeometricCompactness:
    compact: bool
    all_monodromies_geometric: bool


def compact_geometric(sig: Signature, e) -> GeometricCompactness:
    e = Fraction(e)
    if sig.n <= 3 + sig.s0:
        raise ExcludedCase("needs more than 3 + s0 punctures")
    if e <= 0:
        raise ValueError("compactness criterion assumes e > 0")
    target = 1 - sum((frac_rot_of_spec(s) for s in sig.specs), Fraction(0))
    forbidden = sig.count(ClassKind.HYPERBOLIC) + sig.count(ClassKind.NEGATIVE_UNIPOTENT)
    compact = sig.genus == 0 and forbidden == 0 and e == target and 0 < target <= 1
    return GeometricCompactness(compact, compact)
