"""Pseudoweights of pseudocodewords and minimum pseudoweights of a matrix.

Minima over K(H) are taken over its extreme rays.  Each functional is
invariant under positive scaling, so it suffices to minimise over the
polytope ``K(H) & {sum x = 1}``, whose vertices are the normalised extreme
rays.  On that slice every functional is quasi-concave, because each
superlevel set is convex:

* AWGNC: ``1 / sum x_i^2 >= t`` iff ``sum x_i^2 <= 1/t``;
* max-fractional: ``1 / max x_i >= t`` iff ``max x_i <= 1/t``;
* BSC: ``w >= t`` iff ``Phi(t/2) <= 1/2``, and ``Phi(xi)`` (a weighted sum of the
  largest entries) is convex in x;

and a quasi-concave function attains its minimum over a polytope at a
vertex.  For BEC, any cone point is a positive combination of extreme rays
whose supports it contains, so a ray has the smallest support.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .cone import DEFAULT_GUARD, RaySet, extreme_rays, fundamental_cone
from .errors import BudgetExceeded, ZeroVector
from .gf2core import BinaryMatrix

BEC, AWGNC, BSC, MAXFRAC = "bec", "awgnc", "bsc", "maxfrac"
CHANNELS = (BEC, AWGNC, BSC, MAXFRAC)

INF = math.inf


def _check(x: Sequence) -> list:
    xs = [v if isinstance(v, int) else Fraction(v) for v in x]
    if any(v < 0 for v in xs):
        raise ValueError("pseudoweights are defined on nonnegative vectors")
    if not any(xs):
        raise ZeroVector("pseudoweight of the zero vector")
    return xs


def w_bec(x: Sequence) -> int:
    return sum(1 for v in _check(x) if v)


def w_awgnc(x: Sequence) -> Fraction:
    xs = _check(x)
    return Fraction(sum(xs) ** 2) / sum(v * v for v in xs)


def w_maxfrac(x: Sequence) -> Fraction:
    xs = _check(x)
    return Fraction(sum(xs)) / max(xs)


def w_bsc(x: Sequence) -> Fraction:
    """``2 * Phi^{-1}(Phi(n) / 2)`` for the piecewise-linear sorted cumulative sum Phi.

    With x' sorted non-increasingly, Phi(k) = x'_1 + ... + x'_k; find the
    first k with Phi(k) >= S/2 and interpolate inside that segment.
    """
    xs = sorted(_check(x), reverse=True)
    half = Fraction(sum(xs), 2)
    acc = 0
    for k, v in enumerate(xs, start=1):
        if acc + v >= half:
            return 2 * ((k - 1) + (half - acc) / v)
        acc += v
    raise AssertionError("unreachable: Phi(n) >= Phi(n)/2")


WEIGHT_FUNCTIONS = {BEC: w_bec, AWGNC: w_awgnc, BSC: w_bsc, MAXFRAC: w_maxfrac}


def pseudoweight(x: Sequence, channel: str):
    return WEIGHT_FUNCTIONS[channel](x)


def normalize_channels(channels: Iterable[str] | str | None) -> tuple[str, ...]:
    if channels is None or channels == "all":
        return CHANNELS
    if isinstance(channels, str):
        channels = [channels]
    out = []
    for c in channels:
        c = c.lower().replace("-", "").replace("_", "")
        if c not in CHANNELS:
            raise ValueError(f"unknown channel {c!r}")
        out.append(c)
    return tuple(ch for ch in CHANNELS if ch in out)


@dataclass
class PseudoweightReport:
    n: int
    m: int
    minima: dict[str, Fraction | float] = field(default_factory=dict)
    witnesses: dict[str, tuple[int, ...] | None] = field(default_factory=dict)
    d: int | None = None
    n_rays: int = 0

    @property
    def empty_cone(self) -> bool:
        return self.n_rays == 0

    def __getitem__(self, channel: str):
        return self.minima[channel]


def ray_minimum(rays: RaySet, channel: str) -> tuple[Fraction | float, tuple[int, ...] | None]:
    """Smallest value of ``channel`` over ``rays``; ties go to the lexicographically first ray."""
    f = WEIGHT_FUNCTIONS[channel]
    best, witness = INF, None
    for ray in rays:  # sorted, so strict < keeps the first minimiser
        v = f(ray)
        if v < best:
            best, witness = v, ray
    if best is not INF and channel != BEC:
        best = Fraction(best)
    return best, witness


def min_pseudoweights(
    h: BinaryMatrix,
    channels: Iterable[str] | str | None = None,
    d: int | None = None,
    guard: int = DEFAULT_GUARD,
    rays: RaySet | None = None,
) -> PseudoweightReport:
    """Exact minimum pseudoweights of ``h`` for the requested channels.

    An empty cone (K(H) = {0}) yields ``inf`` for every channel.
    """
    if rays is None:
        rays = extreme_rays(fundamental_cone(h), guard=guard)
    report = PseudoweightReport(n=h.n_cols, m=h.n_rows, d=d, n_rays=len(rays))
    for ch in normalize_channels(channels):
        report.minima[ch], report.witnesses[ch] = ray_minimum(rays, ch)
    return report


def is_stopping_set(h: BinaryMatrix, s: int) -> bool:
    return all((r & s).bit_count() != 1 for r in h.rows)


def min_stopping_set(h: BinaryMatrix, budget: int = 2**20) -> int | float:
    """Size of the smallest nonempty stopping set, by exhaustive search over column subsets."""
    n = h.n_cols
    if (1 << n) > budget:
        raise BudgetExceeded(f"2^{n} column subsets exceed budget {budget}")
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            s = 0
            for i in combo:
                s |= 1 << i
            if is_stopping_set(h, s):
                return size
    return INF
