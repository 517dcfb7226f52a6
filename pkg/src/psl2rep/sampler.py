"""Random representations with prescribed boundary classes, and explicit pants."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Sequence

import numpy as np

from .components import BoundarySpec, Signature
from .errors import AmbiguousClass, NoMaximalSigns, NotFound
from .kinds import ClassKind
from .lift import (
    CLASS_TOL,
    INT_TOL,
    RELATION_TOL,
    T,
    Mat2,
    Representation,
    classify,
    commutator,
    euler_number,
    frac_rot,
)


@dataclass(frozen=True)
class SampleConfig:
    seed: int = 0
    max_tries: int = 1000
    spread: float = 1.0
    relation_tol: float = RELATION_TOL
    int_tol: float = INT_TOL
    class_tol: float = CLASS_TOL

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.max_tries < 1:
            raise ValueError("max_tries must be at least 1")
        if not self.spread > 0:
            raise ValueError("spread must be positive")


def make_rng(seed) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_conjugator(rng: np.random.Generator, spread: float = 1.0) -> Mat2:
    """exp of a random traceless matrix, in closed form."""
    p, q, r = rng.uniform(-spread, spread, size=3)
    delta = p * p + q * r
    if delta > 0:
        s = math.sqrt(delta)
        c, k = math.cosh(s), math.sinh(s) / s
    elif delta < 0:
        s = math.sqrt(-delta)
        c, k = math.cos(s), math.sin(s) / s
    else:
        c, k = 1.0, 1.0
    return Mat2(c + k * p, k * q, k * r, c - k * p)


def random_element(rng: np.random.Generator, spread: float = 1.0) -> Mat2:
    return random_conjugator(rng, spread) @ Mat2.rotation(rng.uniform(0.0, 2 * math.pi))


def class_representative(spec: BoundarySpec, rng: np.random.Generator | None = None) -> Mat2:
    kind = spec.kind
    if kind is ClassKind.IDENTITY:
        return Mat2.identity()
    if kind is ClassKind.ELLIPTIC:
        return Mat2.rotation(2 * math.pi * float(spec.frac_rot))
    if kind is ClassKind.HYPERBOLIC:
        lam = math.exp(rng.uniform(0.2, 2.0)) if rng is not None else 2.0
        return Mat2.diag(lam)
    if kind is ClassKind.POSITIVE_UNIPOTENT:
        return T
    return T.inverse()


def random_in_class(spec: BoundarySpec, rng: np.random.Generator, spread: float = 1.0) -> Mat2:
    rep = class_representative(spec, rng)
    return rep.conjugate(random_conjugator(rng, spread))


def _product(ms: Sequence[Mat2]) -> Mat2:
    out = Mat2.identity()
    for m in ms:
        out = out @ m
    return out


def complete_relation(g: int, a: Sequence[Mat2], b: Sequence[Mat2], cs: Sequence[Mat2] = ()) -> Mat2:
    """The last boundary matrix forced by the surface relation."""
    if len(a) != g or len(b) != g:
        raise ValueError("need g matrices A and g matrices B")
    x = _product([commutator(ai, bi) for ai, bi in zip(a, b)])
    return (x @ _product(cs)).inverse()


def forced_index(sig: Signature) -> int:
    """Puncture solved for: the last one in an open class, else the last one."""
    for i in reversed(range(sig.n)):
        if sig.specs[i].kind in (ClassKind.ELLIPTIC, ClassKind.HYPERBOLIC):
            return i
    return sig.n - 1


@dataclass(frozen=True)
class Sample:
    rep: Representation
    forced_index: int
    achieved_frac_rot: float
    tries: int


def sample_rep(sig: Signature, cfg: SampleConfig, rng: np.random.Generator | None = None) -> Sample:
    """Rejection-sample a representation whose boundary classes have the tags of sig."""
    if sig.n < 1:
        raise ValueError("need at least one puncture")
    if rng is None:
        rng = make_rng(cfg.seed)
    j = forced_index(sig)
    target = sig.specs[j].kind
    for attempt in range(1, cfg.max_tries + 1):
        handles = [(random_element(rng, cfg.spread), random_element(rng, cfg.spread)) for _ in range(sig.genus)]
        cs = [None if i == j else random_in_class(s, rng, cfg.spread) for i, s in enumerate(sig.specs)]
        x = _product([commutator(a, b) for a, b in handles])
        before = x @ _product(cs[:j])
        after = _product(cs[j + 1 :])
        cs[j] = before.inverse() @ after.inverse()
        try:
            cls = classify(cs[j], cfg.class_tol)
        except AmbiguousClass:
            continue
        if cls.kind is not target:
            continue
        rep = Representation(sig.genus, tuple(handles), tuple(cs), relation_tol=cfg.relation_tol)
        return Sample(rep, j, frac_rot(cs[j], cfg.class_tol), attempt)
    raise NotFound(f"no representation of the required class after {cfg.max_tries} tries")


def sample_many(sig: Signature, cfg: SampleConfig, count: int) -> list[Sample]:
    """``count`` independent samples, each with its own child generator."""
    children = np.random.SeedSequence(cfg.seed).spawn(count)
    return [sample_rep(sig, cfg, make_rng(child)) for child in children]


def _xi(z: float) -> float:
    return (z + math.copysign(math.sqrt(z * z - 4.0), z)) / 2.0


def _pants(x: float, y: float, z: float) -> Representation:
    xi = _xi(z)
    a = Mat2(x, -1.0, 1.0, 0.0)
    b = Mat2(0.0, xi, -1.0 / xi, y)
    return Representation(0, (), (a, b, (a @ b).inverse()))


def pants_rep(x: float, y: float, z: float, int_tol: float = INT_TOL) -> Representation:
    """Pair of pants with boundary traces +-x, +-y, +-z and Euler number 1."""
    for t in (x, y, z):
        if not abs(t) > 2.0:
            raise ValueError(f"trace {t} is not in the hyperbolic range |t| > 2")
    for sx, sy, sz in product((1, -1), repeat=3):
        rep = _pants(sx * x, sy * y, sz * z)
        if abs(euler_number(rep) - 1.0) <= int_tol:
            return rep
    raise NoMaximalSigns(f"no sign choice for traces ({x}, {y}, {z}) gives Euler number 1")


def measurement_consistent(sig: Signature, sample: Sample, eu: float, tol: float = INT_TOL) -> bool:
    """Whether a measured Euler number fits the classifier's admissibility window.

    Uses the fractional rotations actually achieved, so a forced elliptic
    puncture that missed its prescribed angle is still checked.  Positive
    values are tested directly and negative ones through the dual signature.
    """
    if abs(eu) <= tol:
        return True
    fracs = [frac_rot(c) for c in sample.rep.boundaries]
    top = -sig.punctured_euler_char
    if eu > 0:
        k = eu + sum(fracs) + sig.s0 + sig.s_minus
    else:
        k = -eu + sum(1 - r if r > 0 else 0.0 for r in fracs) + sig.s0 + sig.s_plus
    return abs(k - round(k)) <= tol and 0 < round(k) <= top
