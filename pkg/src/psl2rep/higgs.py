"""Parabolic line bundles and sigma-fixed strata of rank-2 parabolic Higgs bundles.

A stratum is indexed by the degree ``d`` of the sub line bundle L, a vector
``a`` in {0,1}^n and a sign at every puncture with nilpotent residue.  All
arithmetic is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .components import BoundarySpec
from .errors import (
    EmptyStratum,
    ExcludedCase,
    IncompatibleInput,
    InvalidCrossing,
    NotAdmissible,
    UnmappedClass,
)
from .kinds import ClassKind

HALF = Fraction(1, 2)


# parabolic line bundles


@dataclass(frozen=True)
class ParabolicLineBundle:
    degree: int
    weights: tuple[tuple[int, Fraction], ...] = ()

    def __init__(self, degree: int, weights: Mapping[int, object] | None = None):
        items = sorted((int(k), Fraction(v)) for k, v in (weights or {}).items())
        for p, w in items:
            if not 0 <= w < 1:
                raise ValueError(f"weight {w} at puncture {p} outside [0, 1)")
        object.__setattr__(self, "degree", int(degree))
        object.__setattr__(self, "weights", tuple(items))

    @property
    def weight_map(self) -> dict[int, Fraction]:
        return dict(self.weights)


def pdeg(line: ParabolicLineBundle) -> Fraction:
    return line.degree + sum((w for _, w in line.weights), Fraction(0))


def tensor(first: ParabolicLineBundle, second: ParabolicLineBundle) -> ParabolicLineBundle:
    a, b = first.weight_map, second.weight_map
    if a.keys() != b.keys():
        raise ValueError("parabolic line bundles live on different puncture sets")
    degree = first.degree + second.degree
    weights = {}
    for p in a:
        total = a[p] + b[p]
        degree += total.__floor__()
        weights[p] = total - total.__floor__()
    return ParabolicLineBundle(degree, weights)


def dual(line: ParabolicLineBundle) -> ParabolicLineBundle:
    degree = -line.degree
    weights = {}
    for p, w in line.weights:
        if w > 0:
            degree -= 1
            weights[p] = 1 - w
        else:
            weights[p] = w
    return ParabolicLineBundle(degree, weights)


def sub_bundle_jump(degenerate: bool, w1, restricts_to_l_i: bool) -> Fraction:
    """Weight induced on a sub line bundle F at a puncture of an integral rank-2 type."""
    w1 = Fraction(w1)
    if degenerate or not restricts_to_l_i:
        return w1
    return 1 - w1


# weights and residues


@dataclass(frozen=True)
class Weight:
    """Integral rank-2 weight at one puncture: {w1, 1 - w1}, or w1 twice if degenerate."""

    w1: Fraction
    degenerate: bool

    def __post_init__(self):
        w1 = Fraction(self.w1)
        object.__setattr__(self, "w1", w1)
        if self.degenerate:
            if w1 not in (0, HALF):
                raise ValueError(f"degenerate weight must be 0 or 1/2, got {w1}")
        elif not 0 < w1 < HALF:
            raise ValueError(f"non-degenerate weight must lie in (0, 1/2), got {w1}")

    @classmethod
    def deg(cls, w1) -> "Weight":
        return cls(Fraction(w1), True)

    @classmethod
    def nondeg(cls, w1) -> "Weight":
        return cls(Fraction(w1), False)

    @property
    def even(self) -> bool:
        return self.degenerate and self.w1 == 0

    @property
    def odd(self) -> bool:
        return self.degenerate and self.w1 == HALF


class ResidueKind(str, Enum):
    ZERO = "zero"
    NILPOTENT = "nilpotent"
    INVERTIBLE = "invertible"


@dataclass(frozen=True)
class Residue:
    """Conjugacy class of a residue; invertible ones are determined by det."""

    kind: ResidueKind
    det: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", ResidueKind(self.kind))
        if self.kind is ResidueKind.INVERTIBLE:
            if self.det is None or Fraction(self.det) == 0:
                raise ValueError("invertible residue needs a nonzero determinant")
            object.__setattr__(self, "det", Fraction(self.det))
        elif self.det is not None:
            raise ValueError(f"{self.kind.value} residue has determinant 0")

    @classmethod
    def zero(cls) -> "Residue":
        return cls(ResidueKind.ZERO)

    @classmethod
    def nilpotent(cls) -> "Residue":
        return cls(ResidueKind.NILPOTENT)

    @classmethod
    def invertible(cls, det) -> "Residue":
        return cls(ResidueKind.INVERTIBLE, Fraction(det))

    @property
    def determinant(self) -> Fraction:
        return self.det if self.kind is ResidueKind.INVERTIBLE else Fraction(0)

    @property
    def closure_contains_zero(self) -> bool:
        return self.kind is not ResidueKind.INVERTIBLE


def w_l(a: int, weight: Weight) -> Fraction:
    return a + (-1) ** a * weight.w1


def e_of(d: int, a: Sequence[int], w: Sequence[Weight], d0: int) -> Fraction:
    if len(a) != len(w):
        raise ValueError("a and w must have one entry per puncture")
    return 2 * d - d0 + 2 * sum((w_l(ai, wi) for ai, wi in zip(a, w)), Fraction(0))


@dataclass(frozen=True)
class _Counts:
    s: int
    s_even: int
    s_odd: int
    s0: int
    s_inv: int


def _counts(w: Sequence[Weight], res: Sequence[Residue]) -> _Counts:
    deg = [(wi, ri) for wi, ri in zip(w, res) if wi.degenerate]
    return _Counts(
        s=len(deg),
        s_even=sum(1 for wi, _ in deg if wi.even),
        s_odd=sum(1 for wi, _ in deg if wi.odd),
        s0=sum(1 for _, ri in deg if ri.kind is ResidueKind.ZERO),
        s_inv=sum(1 for _, ri in deg if ri.kind is ResidueKind.INVERTIBLE),
    )


def is_compatible(w: Sequence[Weight], res: Sequence[Residue], g: int, n: int | None = None) -> bool:
    if n is None:
        n = len(w)
    if len(w) != n or len(res) != n:
        return False
    for wi, ri in zip(w, res):
        if not wi.degenerate and ri.kind is not ResidueKind.ZERO:
            return False
        if wi.degenerate and ri.determinant < 0:
            return False
    return _counts(w, res).s0 + 2 - 2 * g - n < 0


def _admissible(d, a, w, res, d0, g) -> bool:
    if any(ai not in (0, 1) for ai in a):
        return False
    if any(ai != 0 for ai, wi in zip(a, w) if wi.degenerate):
        return False
    if e_of(d, a, w, d0) < 0:
        return False
    c = _counts(w, res)
    return 2 * d <= d0 - (2 - 2 * g) - sum(a) + c.s_even - c.s0


def is_admissible(d: int, a: Sequence[int], w: Sequence[Weight], res: Sequence[Residue], d0: int, g: int) -> bool:
    if len(a) != len(w) or not is_compatible(w, res, g):
        raise IncompatibleInput("weights and residues are not compatible")
    return _admissible(d, a, w, res, d0, g)


# strata


@dataclass(frozen=True)
class Stratum:
    """A sigma-fixed stratum (d, a, eps) for given weights, residues and deg of the determinant.

    ``eps`` has one entry per puncture: "+" or "-" at nilpotent residues and
    None elsewhere.
    """

    g: int
    d0: int
    weights: tuple[Weight, ...]
    residues: tuple[Residue, ...]
    d: int
    a: tuple[int, ...]
    eps: tuple[str | None, ...] = None
    e: Fraction = field(init=False)
    m: int = field(init=False)
    m_prime: int = field(init=False)
    w_l: tuple[Fraction, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        object.__setattr__(self, "residues", tuple(self.residues))
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        n = len(self.weights)
        if len(self.residues) != n or len(self.a) != n:
            raise ValueError("weights, residues and a must have one entry per puncture")
        eps = self.eps
        if eps is None:
            eps = tuple("+" if r.kind is ResidueKind.NILPOTENT else None for r in self.residues)
        eps = tuple(eps)
        if len(eps) != n:
            raise ValueError("eps must have one entry per puncture")
        for r, s in zip(self.residues, eps):
            if (r.kind is ResidueKind.NILPOTENT) != (s is not None) or s not in (None, "+", "-"):
                raise ValueError("eps must be '+' or '-' exactly at nilpotent residues")
        object.__setattr__(self, "eps", eps)
        c = self.counts
        object.__setattr__(self, "e", e_of(self.d, self.a, self.weights, self.d0))
        object.__setattr__(
            self,
            "m",
            self.d0 + 2 * self.g - 2 - 2 * self.d - sum(self.a) + c.s_even,
        )
        object.__setattr__(
            self,
            "m_prime",
            -self.d0 + self.g - 1 + n + 2 * self.d + sum(self.a) + c.s_odd,
        )
        object.__setattr__(self, "w_l", tuple(w_l(ai, wi) for ai, wi in zip(self.a, self.weights)))

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def counts(self) -> _Counts:
        return _counts(self.weights, self.residues)

    @property
    def s_plus(self) -> int:
        return self.eps.count("+")

    @property
    def s_minus(self) -> int:
        return self.eps.count("-")

    def indices(self, predicate) -> frozenset[int]:
        return frozenset(i for i in range(self.n) if predicate(i))

    @property
    def p_inv(self) -> frozenset[int]:
        return self.indices(lambda i: self.residues[i].kind is ResidueKind.INVERTIBLE)

    @property
    def p_plus(self) -> frozenset[int]:
        return self.indices(lambda i: self.eps[i] == "+")

    @property
    def compatible(self) -> bool:
        return is_compatible(self.weights, self.residues, self.g)

    @property
    def admissible(self) -> bool:
        return self.compatible and _admissible(
            self.d, self.a, self.weights, self.residues, self.d0, self.g
        )


def is_stratum_admissible(stratum: Stratum) -> bool:
    if not stratum.compatible:
        raise IncompatibleInput("weights and residues are not compatible")
    return stratum.admissible


def _require_positive(stratum: Stratum) -> None:
    if not stratum.admissible:
        raise NotAdmissible(f"(d, a) = ({stratum.d}, {list(stratum.a)}) is not admissible")
    if stratum.e <= 0:
        raise NotAdmissible(f"topology needs e > 0, got {stratum.e}")


def stratum_dims(stratum: Stratum) -> tuple[int, int]:
    _require_positive(stratum)
    return stratum.m, stratum.m_prime


@dataclass(frozen=True)
class StratumTopology:
    """Affine bundle of rank ``fiber_rank`` over Sym^base_sym_degree(S minus base_removed).

    ``removed_subbundles`` codimension-one affine subbundles are deleted.  Without
    the quotient by the 2-torsion of the Jacobian the stratum is a torsor over
    this space with ``torsor_components`` connected components.
    """

    base_sym_degree: int
    base_removed: frozenset[int]
    fiber_rank: int
    removed_subbundles: int
    quotient: bool
    closure: bool
    torsor_components: int

    @property
    def compact(self) -> bool:
        base_compact = self.base_sym_degree == 0 or not self.base_removed
        return self.fiber_rank == 0 and self.removed_subbundles == 0 and base_compact


def stratum_topology(stratum: Stratum, quotient: bool = False, closure: bool = False) -> StratumTopology:
    _require_positive(stratum)
    c = stratum.counts
    base = stratum.m - (c.s0 + stratum.s_minus)
    if quotient:
        rank = stratum.m_prime - (c.s - stratum.s_minus)
    else:
        rank = stratum.m_prime - (c.s_inv + c.s0 + stratum.s_plus)
    if base < 0 or rank < 0:
        raise EmptyStratum(f"base degree {base} and fibre rank {rank}: stratum is empty")
    removed = stratum.p_inv if closure else stratum.p_inv | stratum.p_plus
    sheets = 1
    if not quotient and base == 0 and stratum.g > 0:
        sheets = 2 ** (2 * stratum.g)
    return StratumTopology(
        base_sym_degree=base,
        base_removed=removed,
        fiber_rank=rank,
        removed_subbundles=0 if closure else stratum.s_minus,
        quotient=quotient,
        closure=closure,
        torsor_components=sheets,
    )


def _nil_sign_choices(res: Sequence[Residue]):
    slots = [i for i, r in enumerate(res) if r.kind is ResidueKind.NILPOTENT]
    for signs in product("+-", repeat=len(slots)):
        eps = [None] * len(res)
        for i, s in zip(slots, signs):
            eps[i] = s
        yield tuple(eps)


def _a_choices(w: Sequence[Weight]):
    free = [i for i, wi in enumerate(w) if not wi.degenerate]
    for bits in product((0, 1), repeat=len(free)):
        a = [0] * len(w)
        for i, b in zip(free, bits):
            a[i] = b
        yield tuple(a)


def _strata(w, res, d0, g, eps_choices, boundary: bool) -> list[Stratum]:
    w, res = tuple(w), tuple(res)
    if not is_compatible(w, res, g):
        raise IncompatibleInput("weights and residues are not compatible")
    c = _counts(w, res)
    out = []
    for a in _a_choices(w):
        total = 2 * sum((w_l(ai, wi) for ai, wi in zip(a, w)), Fraction(0))
        for eps in eps_choices:
            s_minus = eps.count("-")
            # base degree m - s0 - s_minus >= 0, which also implies admissibility (c)
            top = (d0 + 2 * g - 2 - sum(a) + c.s_even - c.s0 - s_minus) // 2
            # e = 2d - d0 + total must be > 0 (or == 0 for the boundary case)
            d = (Fraction(d0) - total).__floor__() // 2
            while d <= top:
                e = 2 * d - d0 + total
                if (e == 0) if boundary else (e > 0):
                    out.append(Stratum(g, d0, w, res, d, a, eps))
                d += 1
    return out


def enumerate_strata(
    w: Sequence[Weight],
    res: Sequence[Residue],
    d0: int,
    g: int,
    eps: Sequence[str | None] | None = None,
) -> list[Stratum]:
    """All nonempty strata with e > 0, optionally for one fixed sign vector."""
    choices = [tuple(eps)] if eps is not None else list(_nil_sign_choices(res))
    return _strata(w, res, d0, g, choices, boundary=False)


@dataclass(frozen=True)
class SigmaFixedLocus:
    """Partition of the sigma-fixed locus.

    ``strata`` have e > 0 and carry topology; ``boundary`` are the e = 0
    strata, where L and its complement have equal parabolic degree and
    strictly polystable objects occur; they get no topology.  ``bundles_locus``
    records whether the Phi = 0 locus of stable parabolic bundles is present.
    """

    strata: list[Stratum]
    boundary: list[Stratum]
    bundles_locus: bool


def sigma_fixed_locus(w: Sequence[Weight], res: Sequence[Residue], d0: int, g: int) -> SigmaFixedLocus:
    choices = list(_nil_sign_choices(res))
    return SigmaFixedLocus(
        strata=_strata(w, res, d0, g, choices, boundary=False),
        boundary=_strata(w, res, d0, g, choices, boundary=True),
        bundles_locus=all(r.closure_contains_zero for r in res),
    )


# wall crossing

_CROSSING_TABLE = {
    # (a_i, new w1): (new eps, d shift)
    (0, Fraction(0)): ("-", 0),
    (0, HALF): ("+", 0),
    (1, Fraction(0)): ("+", 1),
    (1, HALF): ("-", 0),
}


def wall_cross(stratum: Stratum, i: int, w1_target) -> Stratum:
    """Move the weight of a non-degenerate puncture with zero residue.

    A target inside (0, 1/2) keeps (d, a, eps).  A target of 0 or 1/2 makes the
    weight degenerate and the residue nilpotent, with the new sign and degree
    given by the crossing table.
    """
    target = Fraction(w1_target)
    weight = stratum.weights[i]
    if weight.degenerate or stratum.residues[i].kind is not ResidueKind.ZERO:
        raise InvalidCrossing(f"puncture {i} must be non-degenerate with zero residue")
    if not stratum.admissible or stratum.e <= 0:
        raise InvalidCrossing("crossing starts from an admissible stratum with e > 0")
    weights = list(stratum.weights)
    if 0 < target < HALF:
        weights[i] = Weight.nondeg(target)
        out = replace(stratum, weights=tuple(weights))
    elif target in (0, HALF):
        sign, shift = _CROSSING_TABLE[(stratum.a[i], target)]
        weights[i] = Weight.deg(target)
        residues = list(stratum.residues)
        residues[i] = Residue.nilpotent()
        a = list(stratum.a)
        a[i] = 0
        eps = list(stratum.eps)
        eps[i] = sign
        out = Stratum(
            stratum.g, stratum.d0, tuple(weights), tuple(residues), stratum.d + shift, tuple(a), tuple(eps)
        )
    else:
        raise InvalidCrossing(f"target weight {target} outside [0, 1/2]")
    if out.e <= 0:
        raise InvalidCrossing(f"crossing lands at e' = {out.e} <= 0")
    return out


# compactness


@dataclass(frozen=True)
class Compactness:
    compact: bool
    projective_dim: int | None = None


def is_compact(stratum: Stratum, open_variant: bool = False) -> Compactness:
    c = stratum.counts
    if stratum.e <= 0:
        raise NotAdmissible("compactness criterion assumes e > 0")
    if stratum.g == 0 and stratum.n == 3 + c.s0:
        raise ExcludedCase("g = 0 with n = 3 + s0: the stratum is at most a point")
    target = 1 - sum(
        (1 - 2 * wi.w1) if ai == 0 else 2 * wi.w1
        for ai, wi in zip(stratum.a, stratum.weights)
        if not wi.degenerate
    )
    ok = (
        stratum.g == 0
        and stratum.s_minus == 0
        and c.s_inv == 0
        and stratum.e == target
        and 0 < target <= 1
    )
    if open_variant:
        ok = ok and stratum.s_plus == 0
    return Compactness(ok, stratum.n - 3 - c.s0 if ok else None)


# stability of split data


class Stability(str, Enum):
    STABLE = "stable"
    POLYSTABLE_STRICT = "polystable_strict"
    UNSTABLE = "unstable"
    NOT_SIGMA_FIXED = "not_sigma_fixed"


def stability_split(d_lambda, d_l, phi_nonzero: bool, psi_nonzero: bool) -> Stability:
    """Stability of L^v(Lambda) + L with off-diagonal Higgs field (phi, psi).

    phi maps L to its complement and psi goes back; d_lambda and d_l are the
    parabolic degrees of the determinant and of L.
    """
    d_lambda, d_l = Fraction(d_lambda), Fraction(d_l)
    if d_lambda > 2 * d_l:
        # the complement is the one of larger degree: swap the roles
        return stability_split(d_lambda, d_lambda - d_l, psi_nonzero, phi_nonzero)
    if not (phi_nonzero or psi_nonzero):
        return Stability.NOT_SIGMA_FIXED
    if d_lambda < 2 * d_l:
        return Stability.STABLE if phi_nonzero else Stability.UNSTABLE
    return Stability.POLYSTABLE_STRICT if phi_nonzero and psi_nonzero else Stability.UNSTABLE


# the boundary/Higgs dictionary


@dataclass(frozen=True)
class SL2Class:
    """Conjugacy class in SL(2,R) as it appears in the dictionary.

    ``kind`` is "central", "unipotent", "hyperbolic" or "elliptic".  ``sign`` is
    the overall factor +-1 of the degenerate rows, ``eps`` the unipotent sign,
    ``length`` the hyperbolic translation length and ``w_l`` the elliptic
    rotation parameter (the matrix rotates vectors by -2 pi w_l).
    """

    kind: str
    sign: int = 1
    eps: str | None = None
    length: float | None = None
    w_l: Fraction | None = None


@dataclass(frozen=True)
class LocalHiggs:
    a: int
    weight: Weight
    residue: Residue
    eps: str | None = None


def _w1_of_sign(sign: int) -> Fraction:
    if sign not in (1, -1):
        raise UnmappedClass(f"sign must be +1 or -1, got {sign}")
    return Fraction(0) if sign == 1 else HALF


def boundary_to_higgs(cls: SL2Class) -> LocalHiggs:
    if cls.kind == "central":
        return LocalHiggs(0, Weight.deg(_w1_of_sign(cls.sign)), Residue.zero())
    if cls.kind == "unipotent":
        if cls.eps not in ("+", "-"):
            raise UnmappedClass("unipotent class needs eps '+' or '-'")
        return LocalHiggs(0, Weight.deg(_w1_of_sign(cls.sign)), Residue.nilpotent(), cls.eps)
    if cls.kind == "hyperbolic":
        if cls.length is None or not cls.length > 0:
            raise UnmappedClass("hyperbolic class needs a positive length")
        det = Fraction(cls.length**2 / (64 * math.pi**2))
        return LocalHiggs(0, Weight.deg(_w1_of_sign(cls.sign)), Residue.invertible(det))
    if cls.kind == "elliptic":
        wl = Fraction(cls.w_l) if cls.w_l is not None else None
        if wl is None or not 0 < wl < 1 or wl == HALF:
            raise UnmappedClass(f"elliptic parameter {wl} must lie in (0, 1) minus 1/2")
        if wl < HALF:
            return LocalHiggs(0, Weight.nondeg(wl), Residue.zero())
        return LocalHiggs(1, Weight.nondeg(1 - wl), Residue.zero())
    raise UnmappedClass(f"unknown class kind {cls.kind!r}")


def higgs_to_boundary(local: LocalHiggs) -> SL2Class:
    w, r = local.weight, local.residue
    if not w.degenerate:
        if r.kind is not ResidueKind.ZERO or local.a not in (0, 1):
            raise UnmappedClass("non-degenerate weight needs zero residue")
        return SL2Class("elliptic", w_l=w_l(local.a, w))
    if local.a != 0:
        raise UnmappedClass("degenerate weight needs a = 0")
    sign = 1 if w.even else -1
    if r.kind is ResidueKind.ZERO:
        return SL2Class("central", sign=sign)
    if r.kind is ResidueKind.NILPOTENT:
        if local.eps not in ("+", "-"):
            raise UnmappedClass("nilpotent residue needs eps")
        return SL2Class("unipotent", sign=sign, eps=local.eps)
    if r.det <= 0:
        raise UnmappedClass("invertible residue with det <= 0 has no real boundary class")
    return SL2Class("hyperbolic", sign=sign, length=8 * math.pi * math.sqrt(float(r.det)))


def psl_lifts(spec: BoundarySpec) -> list[LocalHiggs]:
    """Local Higgs data of both SL(2,R) lifts of a PSL(2,R) boundary class."""
    kind = spec.kind
    if kind is ClassKind.ELLIPTIC:
        r = spec.frac_rot
        return [
            LocalHiggs(0, Weight.nondeg((1 - r) / 2), Residue.zero()),
            LocalHiggs(1, Weight.nondeg(r / 2), Residue.zero()),
        ]
    out = []
    for w1 in (Fraction(0), HALF):
        weight = Weight.deg(w1)
        if kind is ClassKind.IDENTITY:
            out.append(LocalHiggs(0, weight, Residue.zero()))
        elif kind is ClassKind.HYPERBOLIC:
            out.append(LocalHiggs(0, weight, Residue.invertible(1)))
        elif kind is ClassKind.POSITIVE_UNIPOTENT:
            out.append(LocalHiggs(0, weight, Residue.nilpotent(), "+"))
        else:
            out.append(LocalHiggs(0, weight, Residue.nilpotent(), "-"))
    return out


def lifted_euler_set(genus: int, specs: Sequence[BoundarySpec]) -> list[Fraction]:
    """Euler numbers of sigma-fixed strata over all SL(2,R) lifts, d0 = 0."""
    values = set()
    for choice in product(*(psl_lifts(s) for s in specs)):
        w = [c.weight for c in choice]
        res = [c.residue for c in choice]
        if not is_compatible(w, res, genus):
            continue
        eps = [c.eps for c in choice]
        for st in enumerate_strata(w, res, 0, genus, eps=eps):
            if st.a == tuple(c.a for c in choice):
                values.add(2 * st.d + 2 * sum(st.w_l))
    return sorted(values)


def normalize_determinant(stratum: Stratum) -> Stratum:
    """Equivalent stratum with trivial determinant.

    An even d0 is absorbed into d.  An odd d0 is first made even by adding an
    auxiliary degenerate puncture of weight 1/2 with zero residue, which keeps
    e and the topology but raises m and m' by one each.
    """
    d0 = stratum.d0
    if d0 % 2 == 0:
        return replace(stratum, d0=0, d=stratum.d - d0 // 2)
    return Stratum(
        stratum.g,
        0,
        stratum.weights + (Weight.deg(HALF),),
        stratum.residues + (Residue.zero(),),
        stratum.d - (d0 + 1) // 2,
        stratum.a + (0,),
        stratum.eps + (None,),
    )
