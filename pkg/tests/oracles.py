"""Independent reference computations used to check the library.

Nothing here calls the lift arithmetic of the package: the lifted circle
map is rebuilt by unwrapping angles along a fine grid, and enumerations are
brute force over explicit menus.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations_with_replacement

import numpy as np

from psl2rep.components import BoundarySpec
from psl2rep.higgs import Residue, Weight


class GridLift:
    """Lift of the circle action of a matrix, pinned by F(0) = u.

    F(t) - t is recorded on a grid over [0, 1) by continuation (each angle
    is the representative nearest to the previous one) and a query takes the
    representative of the true angle nearest to the closest grid value.
    """

    def __init__(self, rows, u: float, points: int = 20000):
        self.m = np.asarray(rows, dtype=float)
        self.points = points
        ts = np.arange(points + 1) / points
        raw = self._angles(ts)
        # continuation: successive values differ by the wrapped increment
        inc = np.diff(raw)
        inc -= np.round(inc)
        if np.max(np.abs(inc)) >= 0.25:
            raise ValueError("grid too coarse for this matrix")
        gap = raw[0] - u
        if abs(gap - round(gap)) > 1e-9:
            raise ValueError("u is not a lift of the image of t = 0")
        self.values = u + np.concatenate([[0.0], np.cumsum(inc)])
        if abs(self.values[-1] - self.values[0] - 1.0) > 1e-6:
            raise ValueError("lift does not have degree one")

    def _angles(self, ts):
        v = np.stack([np.cos(np.pi * ts), np.sin(np.pi * ts)])
        w = self.m @ v
        return np.arctan2(w[1], w[0]) / np.pi

    def __call__(self, x: float) -> float:
        k = math.floor(x)
        t = x - k
        j = min(int(round(t * self.points)), self.points)
        ref = float(self.values[j])
        (p, q), (r, s) = self.m.tolist()
        c, sn = math.cos(math.pi * t), math.sin(math.pi * t)
        a = math.atan2(r * c + s * sn, p * c + q * sn) / math.pi
        return a + round(ref - a) + k


def birkhoff_rot(rows, u: float, iterations: int = 10_000) -> float:
    f = GridLift(rows, u)
    x = 0.0
    for _ in range(iterations):
        x = f(x)
    return x / iterations


# brute-force menus

ELLIPTIC_MENU = (Fraction(1, 4), Fraction(1, 2), Fraction(2, 3))


def spec_menu() -> list[BoundarySpec]:
    return [
        BoundarySpec.identity(),
        BoundarySpec.hyperbolic(),
        BoundarySpec.positive_unipotent(),
        BoundarySpec.negative_unipotent(),
        *(BoundarySpec.elliptic(r) for r in ELLIPTIC_MENU),
    ]


def signatures(max_genus: int, max_n: int, menu=None):
    """(genus, specs) for every multiset of menu entries with negative Euler characteristic."""
    menu = spec_menu() if menu is None else menu
    for g in range(max_genus + 1):
        for n in range(1, max_n + 1):
            if 2 - 2 * g - n >= 0:
                continue
            for specs in combinations_with_replacement(menu, n):
                yield g, specs


WEIGHT_MENU = (Fraction(0), Fraction(1, 8), Fraction(1, 4), Fraction(3, 8), Fraction(1, 2))
RESIDUE_MENU = (Residue.zero(), Residue.nilpotent(), Residue.invertible(1), Residue.invertible(-1))


def local_menu() -> list[tuple[Weight, Residue]]:
    out = []
    for w1 in WEIGHT_MENU:
        weight = Weight.deg(w1) if w1 in (0, Fraction(1, 2)) else Weight.nondeg(w1)
        for r in RESIDUE_MENU:
            out.append((weight, r))
    return out


def weight_residue_systems(g: int, n: int):
    """Every multiset of per-puncture (weight, residue) pairs from the menus."""
    for combo in combinations_with_replacement(local_menu(), n):
        yield tuple(c[0] for c in combo), tuple(c[1] for c in combo)


def euler_set_by_search(genus: int, specs) -> list[Fraction]:
    """Euler numbers found by scanning a fine rational grid against the theorem's conditions."""
    n = len(specs)
    top = 2 * genus - 2 + n
    frac = sum((s.frac_rot or Fraction(0) for s in specs), Fraction(0))
    s0 = sum(1 for s in specs if s.kind.value == "identity")
    s_minus = sum(1 for s in specs if s.kind.value == "negative_unipotent")
    den = math.lcm(*(s.frac_rot.denominator for s in specs if s.frac_rot is not None), 1)
    found = []
    for num in range(1, top * den + 1):
        e = Fraction(num, den)
        k = e + frac + s0 + s_minus
        m = top - e - frac
        if k.denominator == 1 and 0 < k <= top and m >= s0 + s_minus:
            found.append(e)
    return found


def path_lift_value(path, steps: int = 4000) -> float:
    """F(0) at the end of a path of matrices starting at the identity with F(0) = 0.

    ``path(s)`` returns a 2x2 array for s in [0, 1]; the image of e1 is
    followed continuously, which pins the lift without any group law.
    """
    u = 0.0
    prev = 0.0
    for i in range(steps + 1):
        m = np.asarray(path(i / steps), dtype=float)
        a = math.atan2(m[1, 0], m[0, 0]) / math.pi
        step = a - prev
        step -= round(step)
        if abs(step) >= 0.25:
            raise ValueError("path sampled too coarsely")
        u += step
        prev = a
    return u


def commutator_path(a_path, b):
    """s -> [A_s, B] as arrays, for a path A_s starting at the identity."""
    b = np.asarray(b, dtype=float)
    b_inv = np.linalg.inv(b)

    def path(s):
        a = np.asarray(a_path(s), dtype=float)
        return a @ b @ np.linalg.inv(a) @ b_inv

    return path


def rotation_array(theta: float):
    h = theta / 2
    return [[math.cos(h), -math.sin(h)], [math.sin(h), math.cos(h)]]
