"""Fundamental cone K(H) and exact extreme-ray enumeration.

The cone is ``{x >= 0 : x_l <= sum_{i in I_j, i != l} x_i  for all checks j, l in I_j}``.
Rays are enumerated with the double description method over Python ints,
starting from the nonnegative orthant (whose rays are the unit vectors) and
adding the check inequalities one at a time.  Every intermediate cone lies
inside the orthant and is therefore pointed, so the combinatorial adjacency
test of Fukuda and Prodon applies: two rays are adjacent iff no third ray is
active on every inequality that both of them make tight.
"""

from __future__ import annotations

import math
import random
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionGuard
from .gf2core import BinaryMatrix, support

DEFAULT_GUARD = 16

Vector = tuple[int, ...]


@dataclass(frozen=True)
class ConeSystem:
    """Homogeneous system ``a . x >= 0`` for every row ``a`` of ``inequalities``."""

    n: int
    inequalities: tuple[Vector, ...]

    def __post_init__(self):
        ineqs = tuple(tuple(int(v) for v in a) for a in self.inequalities)
        for a in ineqs:
            if len(a) != self.n:
                raise ValueError(f"inequality of length {len(a)} in dimension {self.n}")
        object.__setattr__(self, "inequalities", ineqs)

    def has_nonnegativity(self) -> bool:
        units = set(self.inequalities)
        return all(unit(i, self.n) in units for i in range(self.n))


@dataclass(frozen=True)
class RaySet:
    """Primitive nonnegative integer extreme rays, sorted lexicographically."""

    n: int
    rays: tuple[Vector, ...]

    def __len__(self):
        return len(self.rays)

    def __iter__(self):
        return iter(self.rays)

    def __bool__(self):
        return bool(self.rays)


def unit(i: int, n: int) -> Vector:
    return tuple(1 if t == i else 0 for t in range(n))


def primitive(v: Iterable[int]) -> Vector:
    v = tuple(v)
    g = 0
    for x in v:
        g = math.gcd(g, x)
    if g <= 1:
        return v
    return tuple(x // g for x in v)


def fundamental_cone(h: BinaryMatrix) -> ConeSystem:
    """Nonnegativity rows first, then one row per (check, position in its support)."""
    n = h.n_cols
    ineqs = [unit(i, n) for i in range(n)]
    for r in h.rows:
        supp = support(r)
        for ell in supp:
            ineqs.append(tuple(-1 if i == ell else (1 if i in supp else 0) for i in range(n)))
    return ConeSystem(n, tuple(ineqs))


def _dot(a: Sequence, x: Sequence):
    return sum(ai * xi for ai, xi in zip(a, x) if ai)


def extreme_rays(system: ConeSystem, guard: int = DEFAULT_GUARD) -> RaySet:
    """All extreme rays of ``system`` as primitive integer vectors.

    The system must contain every nonnegativity row (true for any
    :func:`fundamental_cone`).  Raises DimensionGuard when ``n > guard``.
    """
    n = system.n
    if n > guard:
        raise DimensionGuard(f"cone dimension {n} exceeds guard {guard}")
    if not system.has_nonnegativity():
        raise ValueError("double description start requires every nonnegativity row x_i >= 0")

    units = {unit(i, n) for i in range(n)}
    rest = sorted(
        {a for a in system.inequalities if a not in units},
        key=lambda a: (sum(1 for v in a if v), a),
    )
    # zero sets are bitmasks over: bit i <-> x_i >= 0, bit n+t <-> rest[t]
    full = (1 << n) - 1
    rays: list[tuple[Vector, int]] = [(unit(i, n), full ^ (1 << i)) for i in range(n)]

    for t, a in enumerate(rest):
        bit = 1 << (n + t)
        pos, neg, zero = [], [], []
        for ray, z in rays:
            s = _dot(a, ray)
            if s > 0:
                pos.append((ray, z, s))
            elif s < 0:
                neg.append((ray, z, s))
            else:
                zero.append((ray, z | bit))
        if not neg:
            rays = [(ray, z) for ray, z, _ in pos] + zero
            continue
        zsets = [z for _, z in rays]
        created = []
        for rp, zp, sp in pos:
            for rq, zq, sq in neg:
                common = zp & zq
                if common.bit_count() < n - 2:
                    continue
                hits = 0
                for z in zsets:
                    if z & common == common:
                        hits += 1
                        if hits > 2:
                            break
                if hits > 2:
                    continue
                new = primitive(sp * xq - sq * xp for xp, xq in zip(rp, rq))
                created.append((new, common | bit))
        rays = [(ray, z) for ray, z, _ in pos] + zero + created
        if not rays:
            break

    return RaySet(n, tuple(sorted(ray for ray, _ in rays)))


def cone_contains(system: ConeSystem, x: Sequence) -> bool:
    return all(_dot(a, x) >= 0 for a in system.inequalities)


def rational_rank(rows: Iterable[Sequence]) -> int:
    """Rank over the rationals, by fraction-free integer elimination.

    Rational entries are scaled to integers row by row first.
    """
    work = []
    for r in rows:
        r = [Fraction(v) for v in r]
        den = 1
        for v in r:
            den = den * v.denominator // math.gcd(den, v.denominator)
        ints = [int(v * den) for v in r]
        if any(ints):
            work.append(ints)
    rk = 0
    while work:
        p = work.pop()
        c = next(i for i, v in enumerate(p) if v)
        pc = p[c]
        nxt = []
        for r in work:
            rc = r[c]
            if rc:
                r = [pc * a - rc * b for a, b in zip(r, p)]
                g = 0
                for v in r:
                    g = math.gcd(g, v)
                if g == 0:
                    continue
                if g > 1:
                    r = [v // g for v in r]
            nxt.append(r)
        work = nxt
        rk += 1
    return rk


def active_rank(system: ConeSystem, x: Sequence) -> int:
    """Rank of the inequalities tight at ``x``; an extreme ray has rank n-1."""
    return rational_rank(a for a in system.inequalities if _dot(a, x) == 0)


def is_extreme(system: ConeSystem, x: Sequence) -> bool:
    return any(x) and cone_contains(system, x) and active_rank(system, x) == system.n - 1


def sample_cone_point(rays: RaySet, seed: int) -> tuple[Fraction, ...]:
    """Deterministic positive rational combination of a random subset of rays."""
    if not rays:
        raise ValueError("cannot sample from an empty ray set")
    rng = random.Random(seed)
    k = rng.randint(1, len(rays))
    chosen = rng.sample(range(len(rays)), k)
    point = [Fraction(0)] * rays.n
    for idx in chosen:
        coef = Fraction(rng.randint(1, 64), rng.randint(1, 64))
        point = [p + coef * r for p, r in zip(point, rays.rays[idx])]
    return tuple(point)


def zero_column_warning(h: BinaryMatrix) -> list[int]:
    """Columns of ``h`` that no check touches; warns, since then D = 1."""
    cols = [i for i in range(h.n_cols) if not any((r >> i) & 1 for r in h.rows)]
    if cols:
        warnings.warn(f"zero columns {cols}: unit rays are pseudocodewords and D = 1", stacklevel=2)
    return cols
