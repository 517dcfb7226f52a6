"""PSL(2,R), its universal cover, rotation numbers and Euler numbers.

The boundary circle RP^1 is parametrized with period 1: the parameter
``t`` stands for the line spanned by ``(cos(pi t), sin(pi t))`` and a matrix
acts by the ordinary matrix-vector product.  With this choice a rotation of
vectors by ``phi`` moves every parameter by ``phi / pi``, so the central
element ``zeta`` of the universal cover is translation by 1.

An element of the universal cover is stored as a matrix together with the
value ``u = F(0)`` of the chosen lift ``F`` of its circle action.  Every
other value of ``F`` is recovered from ``u`` by monotonicity (see
:func:`evaluate`), so no path ever has to be tracked.
"""

from __future__ import annotations

import math
from dataclasses import InitVar, dataclass, field
from typing import Iterable, Sequence

from .errors import AmbiguousClass, InvalidSignature, RelationViolation
from .kinds import ClassKind

DET_TOL = 1e-9
CLASS_TOL = 1e-9
RELATION_TOL = 1e-6
INT_TOL = 1e-6


@dataclass(frozen=True)
class Mat2:
    """Unit-determinant 2x2 real matrix, taken up to sign.

    Any matrix with positive determinant is accepted and rescaled by the
    square root of its determinant; the sign is then fixed so that the first
    nonzero entry (row-major) is positive.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        entries = [float(x) for x in (self.a, self.b, self.c, self.d)]
        if not all(math.isfinite(x) for x in entries):
            raise ValueError("matrix entries must be finite")
        det = entries[0] * entries[3] - entries[1] * entries[2]
        if not det > 0:
            raise ValueError(f"determinant must be positive, got {det!r}")
        scale = math.sqrt(det)
        entries = [x / scale for x in entries]
        lead = next(x for x in entries if x != 0.0)
        if lead < 0:
            entries = [-x for x in entries]
        for name, value in zip("abcd", entries):
            object.__setattr__(self, name, value + 0.0)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]]) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def rotation(cls, theta: float) -> "Mat2":
        """The rotation of angle ``theta`` about i, i.e. vectors turn by theta/2."""
        h = theta / 2
        return cls(math.cos(h), -math.sin(h), math.sin(h), math.cos(h))

    @classmethod
    def diag(cls, lam: float) -> "Mat2":
        return cls(lam, 0.0, 0.0, 1.0 / lam)

    def rows(self) -> list[list[float]]:
        return [[self.a, self.b], [self.c, self.d]]

    @property
    def trace(self) -> float:
        return self.a + self.d

    @property
    def det(self) -> float:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a)

    def conjugate(self, g: "Mat2") -> "Mat2":
        """Return g M g^-1."""
        return g @ self @ g.inverse()

    def apply(self, v: tuple[float, float]) -> tuple[float, float]:
        return (self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1])

    def distance(self, other: "Mat2") -> float:
        """Max-entry distance between the two sign classes."""
        mine = (self.a, self.b, self.c, self.d)
        theirs = (other.a, other.b, other.c, other.d)
        plus = max(abs(x - y) for x, y in zip(mine, theirs))
        minus = max(abs(x + y) for x, y in zip(mine, theirs))
        return min(plus, minus)


T = Mat2(1.0, 0.0, 1.0, 1.0)


def commutator(a: Mat2, b: Mat2) -> Mat2:
    return a @ b @ a.inverse() @ b.inverse()


@dataclass(frozen=True)
class IsometryClass:
    kind: ClassKind
    frac_rot: float | None = None
    translation_length: float | None = None


def _elliptic_conjugator(m: Mat2) -> Mat2:
    # upper-triangular P with P.i = fixed point of z -> (az+b)/(cz+d) in H
    disc = 4.0 - m.trace * m.trace
    x = (m.a - m.d) / (2.0 * m.c)
    y = math.sqrt(disc) / (2.0 * abs(m.c))
    r = math.sqrt(y)
    return Mat2(r, x / r, 0.0, 1.0 / r)


def _elliptic_frac(m: Mat2) -> float:
    p = _elliptic_conjugator(m)
    k = p.inverse() @ m @ p
    frac = (math.atan2(k.c, k.a) / math.pi) % 1.0
    if frac >= 1.0:
        frac = 0.0
    return frac


def _unipotent_sign(m: Mat2, tol: float) -> ClassKind:
    s = 1.0 if m.trace > 0 else -1.0
    n = (s * m.a - 1.0, s * m.b, s * m.c, s * m.d - 1.0)
    # probe perpendicular to the fixed line; for the lift fixing that line the
    # sign of cross(w, Mw) is the sign of its displacement away from it
    v = _kernel(n)
    w = (-v[1], v[0])
    mw = (n[0] * w[0] + n[1] * w[1] + w[0], n[2] * w[0] + n[3] * w[1] + w[1])
    probe = w[0] * mw[1] - w[1] * mw[0]
    # x -> cross(x, Mx) is a quadratic form of trace s(c - b) and determinant
    # (4 - tr^2)/4; it must be semidefinite up to tolerance for a unipotent
    trace = s * (m.c - m.b)
    minor = abs(4.0 - m.trace * m.trace) / 4.0
    if abs(trace) <= tol or minor > tol * abs(trace) or abs(probe) <= tol or (probe > 0) != (trace > 0):
        raise AmbiguousClass(
            f"trace {m.trace!r} is within tolerance of 2 but the matrix is not a clean unipotent"
        )
    return ClassKind.POSITIVE_UNIPOTENT if probe > 0 else ClassKind.NEGATIVE_UNIPOTENT


def classify(m: Mat2, tol: float = CLASS_TOL) -> IsometryClass:
    if tol <= 0:
        raise ValueError("tol must be positive")
    t = abs(m.trace)
    if t < 2.0 - tol:
        return IsometryClass(ClassKind.ELLIPTIC, frac_rot=_elliptic_frac(m))
    if t > 2.0 + tol:
        return IsometryClass(
            ClassKind.HYPERBOLIC, translation_length=2.0 * math.acosh(t / 2.0)
        )
    if max(abs(m.b), abs(m.c)) <= tol:
        return IsometryClass(ClassKind.IDENTITY)
    return IsometryClass(_unipotent_sign(m, tol))


def frac_rot(m: Mat2, tol: float = CLASS_TOL) -> float:
    cls = classify(m, tol)
    return cls.frac_rot if cls.kind is ClassKind.ELLIPTIC else 0.0


def _angle(v: tuple[float, float]) -> float:
    t = (math.atan2(v[1], v[0]) / math.pi) % 1.0
    return 0.0 if t >= 1.0 else t


def _kernel(n: tuple[float, float, float, float]) -> tuple[float, float]:
    p, q, r, s = n
    v1, v2 = (-q, p), (-s, r)
    v = v1 if math.hypot(*v1) >= math.hypot(*v2) else v2
    norm = math.hypot(*v)
    return (v[0] / norm, v[1] / norm)


def fixed_direction(m: Mat2) -> float:
    """Parameter in [0, 1) of a real eigenline of a non-elliptic matrix."""
    tr = m.trace
    s = 1.0 if tr > 0 else -1.0
    lam = (abs(tr) + math.sqrt(max(tr * tr - 4.0, 0.0))) / 2.0
    n = (s * m.a - lam, s * m.b, s * m.c, s * m.d - lam)
    return _angle(_kernel(n))


@dataclass(frozen=True)
class LiftedIsometry:
    matrix: Mat2
    lifted_value: float


def evaluate(g: LiftedIsometry, x: float) -> float:
    """Value at ``x`` of the lift of the circle action selected by ``g``.

    For t in [0, 1) the lift lands in [u, u+1), and its offset from u is
    the counterclockwise angle from M e1 to M v(t), which lies in [0, pi)
    because M preserves orientation.
    """
    k = math.floor(x)
    t = x - k
    m = g.matrix
    w0 = (m.a, m.c)
    vt = (math.cos(math.pi * t), math.sin(math.pi * t))
    wt = m.apply(vt)
    dot = w0[0] * wt[0] + w0[1] * wt[1]
    cross = m.det * math.sin(math.pi * t)
    return g.lifted_value + math.atan2(cross, dot) / math.pi + k


def canonical_lift(m: Mat2) -> LiftedIsometry:
    return LiftedIsometry(m, _angle((m.a, m.c)))


def shift_branch(g: LiftedIsometry, m: int) -> LiftedIsometry:
    return LiftedIsometry(g.matrix, g.lifted_value + m)


def compose(g: LiftedIsometry, h: LiftedIsometry) -> LiftedIsometry:
    return LiftedIsometry(g.matrix @ h.matrix, evaluate(g, h.lifted_value))


def invert(g: LiftedIsometry) -> LiftedIsometry:
    inv = g.matrix.inverse()
    c = _angle((inv.a, inv.c))
    return LiftedIsometry(inv, c - round(evaluate(g, c)))


def identity_lift(k: int = 0) -> LiftedIsometry:
    return LiftedIsometry(Mat2.identity(), float(k))


def rot(g: LiftedIsometry, tol: float = CLASS_TOL) -> float:
    """Rotation (translation) number of a lifted isometry."""
    cls = classify(g.matrix, tol)
    if cls.kind is ClassKind.ELLIPTIC:
        # conjugate to an exact rotation, whose lift has constant displacement
        p = canonical_lift(_elliptic_conjugator(g.matrix))
        return compose(invert(p), compose(g, p)).lifted_value
    if cls.kind is ClassKind.IDENTITY:
        t_fix = 0.0
    else:
        t_fix = fixed_direction(g.matrix)
    k = evaluate(g, t_fix) - t_fix
    if abs(k - round(k)) > INT_TOL:
        raise AmbiguousClass(f"non-elliptic lift has non-integral displacement {k!r}")
    return float(round(k))


@dataclass(frozen=True)
class Representation:
    """A homomorphism from a punctured-surface group, given on generators.

    The relation is [A_1,B_1]...[A_g,B_g] C_1...C_n = 1 in PSL(2,R).
    """

    genus: int
    handles: tuple[tuple[Mat2, Mat2], ...]
    boundaries: tuple[Mat2, ...]
    relation_tol: InitVar[float | None] = RELATION_TOL

    def __post_init__(self, relation_tol):
        object.__setattr__(self, "handles", tuple(tuple(h) for h in self.handles))
        object.__setattr__(self, "boundaries", tuple(self.boundaries))
        if self.genus < 0 or len(self.handles) != self.genus:
            raise InvalidSignature("need exactly one (A, B) pair per handle")
        if 2 - 2 * self.genus - len(self.boundaries) >= 0:
            raise InvalidSignature("punctured surface must have negative Euler characteristic")
        if relation_tol is not None:
            res = self.relation_residual()
            if res > relation_tol:
                raise RelationViolation(f"relation residual {res:.3g} exceeds {relation_tol:g}")

    @property
    def n(self) -> int:
        return len(self.boundaries)

    @property
    def euler_char(self) -> int:
        return 2 - 2 * self.genus - self.n

    def relation_product(self) -> Mat2:
        p = Mat2.identity()
        for a, b in self.handles:
            p = p @ commutator(a, b)
        for c in self.boundaries:
            p = p @ c
        return p

    def relation_residual(self) -> float:
        return self.relation_product().distance(Mat2.identity())

    @classmethod
    def closed(cls, genus: int, handles: Iterable[tuple[Mat2, Mat2]], **kw) -> "Representation":
        """Closed-surface representation, punctured once with identity monodromy."""
        handles = tuple(handles)
        p = Mat2.identity()
        for a, b in handles:
            p = p @ commutator(a, b)
        return cls(genus, handles, (p.inverse(),), **kw)


def boundary_lifts(
    rep: Representation,
    shifts: Sequence[int] | None = None,
    tol: float = CLASS_TOL,
) -> list[LiftedIsometry]:
    """Lifts of C_1..C_n compatible with a lift of the whole representation.

    ``shifts`` optionally moves the lifts of A_1, B_1, ..., A_g, B_g,
    C_1, ..., C_{n-1} (in that order) by integers before the last boundary
    lift is forced by the relation.
    """
    gens = [m for pair in rep.handles for m in pair] + list(rep.boundaries[:-1])
    if shifts is None:
        shifts = [0] * len(gens)
    if len(shifts) != len(gens):
        raise ValueError(f"expected {len(gens)} branch shifts, got {len(shifts)}")
    lifts = [shift_branch(canonical_lift(m), k) for m, k in zip(gens, shifts)]
    prod = identity_lift()
    for i in range(rep.genus):
        a, b = lifts[2 * i], lifts[2 * i + 1]
        prod = compose(prod, compose(compose(a, b), compose(invert(a), invert(b))))
    cs = lifts[2 * rep.genus :]
    for c in cs:
        prod = compose(prod, c)
    forced = invert(prod)
    last = canonical_lift(rep.boundaries[-1])
    k = round(last.lifted_value - forced.lifted_value)
    return cs + [shift_branch(last, -k)]


def euler_number(
    rep: Representation,
    shifts: Sequence[int] | None = None,
    tol: float = CLASS_TOL,
    relation_tol: float = RELATION_TOL,
) -> float:
    res = rep.relation_residual()
    if res > relation_tol:
        raise RelationViolation(f"relation residual {res:.3g} exceeds {relation_tol:g}")
    return -sum(rot(c, tol) for c in boundary_lifts(rep, shifts, tol)) + 0.0


@dataclass(frozen=True)
class MilnorWood:
    eu: float
    bound: float
    slack: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "slack", self.bound - abs(self.eu))


def milnor_wood(rep: Representation, tol: float = CLASS_TOL) -> MilnorWood:
    return MilnorWood(euler_number(rep, tol=tol), float(-rep.euler_char))
