"""Closed-form pseudoweight bounds, design detection and the eigenvalue bound."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .constructions import circulant
from .errors import DegenerateSpectrum, Disconnected, NotRegular
from .gf2core import DEFAULT_BUDGET, BinaryMatrix, LinearCode, dual_code, min_distance

SPECTRAL_TOL = 1e-9


def awgnc_upper_bound(n: int, d: int) -> tuple[Fraction, tuple[int, ...]]:
    """``(n + d - 2)^2 / ((d - 1)^2 + n - 1)``, attained by ``(d-1, 1, ..., 1)``.

    ``d`` is the dual distance, so every check has weight >= d and the
    witness lies in K(H) for every parity-check matrix H.
    """
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    witness = (d - 1,) + (1,) * (n - 1)
    return Fraction((n + d - 2) ** 2, (d - 1) ** 2 + (n - 1)), witness


def awgnc_upper_bound_relative(n: int, delta_dual: float) -> float:
    """The AWGNC bound rewritten in terms of the relative dual distance d/n."""
    return (1 + delta_dual - 2 / n) ** 2 / ((delta_dual - 1 / n) ** 2 + (1 / n - 1 / n**2))


def bsc_upper_bound(n: int, d: int) -> tuple[int, tuple[int, ...]]:
    """``2 * ceil(n/d)`` with witness ``(d-1,)*tau + (1,)*(n-tau)``, tau = ceil(n/d)."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    tau = -(-n // d)
    return 2 * tau, (d - 1,) * tau + (1,) * (n - tau)


@dataclass(frozen=True)
class DesignParameters:
    kind: str  # "partial" or "bibd"
    w_c: int
    lam: int
    n: int
    m: int
    w_r: int | None = None

    def lower_bound(self) -> Fraction:
        return design_lower_bound(self)


def _columns(h: BinaryMatrix) -> list[int]:
    return list(h.transpose().rows)


def detect_design(h: BinaryMatrix) -> DesignParameters | None:
    """Classify the rows of ``h`` as blocks of a BIBD, a partial design, or neither."""
    n, m = h.n_cols, h.n_rows
    if n < 2 or m == 0:
        return None
    cols = _columns(h)
    col_w = {c.bit_count() for c in cols}
    if len(col_w) != 1:
        return None
    w_c = col_w.pop()
    pair = [(cols[a] & cols[b]).bit_count() for a in range(n) for b in range(a + 1, n)]
    lam = max(pair)
    if w_c < 1 or lam < 1:
        return None
    row_w = set(h.row_weights())
    if len(row_w) == 1 and min(pair) == lam:
        return DesignParameters("bibd", w_c, lam, n, m, w_r=row_w.pop())
    return DesignParameters("partial", w_c, lam, n, m)


def design_lower_bound(p: DesignParameters) -> Fraction:
    """``1 + w_c / lambda``, a lower bound on every minimum pseudoweight but BEC."""
    return 1 + Fraction(p.w_c, p.lam)


def tanner_connected(h: BinaryMatrix) -> bool:
    """Connectivity of the bipartite graph on columns and rows of ``h``."""
    n, m = h.n_cols, h.n_rows
    if n + m == 0:
        return True
    parent = list(range(n + m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for j, r in enumerate(h.rows):
        i = 0
        while r:
            if r & 1:
                parent[find(n + j)] = find(i)
            r >>= 1
            i += 1
    root = find(0)
    return all(find(v) == root for v in range(n + m))


@dataclass(frozen=True)
class EigenvalueBoundResult:
    mu1: float
    mu2: float
    w_c: int
    w_r: int
    bound: float
    connected: bool = True


def _spectral_bound(n: int, w_c: int, w_r: int, mu1: float, mu2: float) -> EigenvalueBoundResult:
    if mu1 - mu2 < SPECTRAL_TOL * max(mu1, 1.0):
        raise DegenerateSpectrum(f"mu1 = {mu1!r} and mu2 = {mu2!r} coincide")
    bound = n * (2 * w_c - mu2) / (mu1 - mu2)
    return EigenvalueBoundResult(mu1, mu2, w_c, w_r, bound, True)


def regularity(h: BinaryMatrix) -> tuple[int, int]:
    """``(w_c, w_r)`` if every column and every row has the same weight, else NotRegular."""
    cw, rw = set(h.col_weights()), set(h.row_weights())
    if len(cw) != 1 or len(rw) != 1 or 0 in cw:
        raise NotRegular(f"column weights {sorted(cw)}, row weights {sorted(rw)}")
    return cw.pop(), rw.pop()


def eigenvalue_bound(h: BinaryMatrix) -> EigenvalueBoundResult:
    """Spectral lower bound ``n (2 w_c - mu2) / (mu1 - mu2)`` on the minimum AWGNC pseudoweight.

    mu1 >= mu2 are the two largest eigenvalues of ``H^T H`` over the reals,
    counted with multiplicity.
    """
    w_c, w_r = regularity(h)
    if not tanner_connected(h):
        raise Disconnected("Tanner graph is not connected")
    if h.n_cols < 2:
        raise DegenerateSpectrum("a single column has one eigenvalue")
    a = h.to_numpy()
    lap = a.T @ a
    ev = np.linalg.eigvalsh(lap.astype(float))[::-1]
    return _spectral_bound(h.n_cols, w_c, w_r, float(ev[0]), float(ev[1]))


def circulant_spectrum(c: Sequence[int]) -> np.ndarray:
    """Eigenvalues ``|sum_j c_j omega^(j t)|^2`` of ``H^T H`` for the circulant of ``c``, t = 0..n-1."""
    return np.abs(np.fft.fft(np.asarray(c, dtype=float))) ** 2


def circulant_eigenvalue_bound(c: Sequence[int]) -> EigenvalueBoundResult:
    n = len(c)
    w = sum(c)
    if not tanner_connected(circulant(c)):
        raise Disconnected("Tanner graph of the circulant is not connected")
    if n < 2:
        raise DegenerateSpectrum("length-1 circulant")
    spec = circulant_spectrum(c)
    mu1 = float(w * w)
    mu2 = float(spec[1:].max())
    if mu2 < SPECTRAL_TOL * mu1:
        mu2 = 0.0  # FFT round-off on a zero eigenvalue
    return _spectral_bound(n, w, w, mu1, mu2)


def binary_entropy(p: float) -> float:
    if p < 0 or p > 1:
        raise ValueError("p must lie in [0, 1]")
    if p == 0 or p == 1:
        return 0.0
    p = float(p)
    return -p * math.log2(p) - (1 - p) * math.log2(1 - p)


def inv_binary_entropy(y: float, tol: float = 1e-12) -> float:
    """The preimage of ``y`` under the binary entropy function on [0, 1/2]."""
    if y < 0 or y > 1:
        raise ValueError("y must lie in [0, 1]")
    if y == 0 or y == 1:
        return y / 2
    lo, hi = 0.0, 0.5
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if binary_entropy(mid) < y:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def gv_relative_distance(rate: float, epsilon: float = 0.0) -> float:
    """Gilbert-Varshamov relative distance ``H2^{-1}(1 - R) - epsilon``."""
    return inv_binary_entropy(1 - rate) - epsilon


@dataclass(frozen=True)
class BoundGapReport:
    n: int
    k: int
    d_code: int
    d_dual: int
    awgnc_ub: Fraction
    awgnc_witness: tuple[int, ...]
    bsc_ub: int
    bsc_witness: tuple[int, ...]

    @property
    def gaps(self) -> dict[str, Fraction]:
        """Distance minus upper bound; positive means no matrix reaches D."""
        return {"awgnc": self.d_code - self.awgnc_ub, "bsc": Fraction(self.d_code - self.bsc_ub)}

    @property
    def rho_awgnc_infinite(self) -> bool:
        return self.awgnc_ub < self.d_code

    @property
    def rho_bsc_infinite(self) -> bool:
        return self.bsc_ub < self.d_code

    @property
    def rho_maxfrac_infinite(self) -> bool:
        # max-fractional minimum sits below both the AWGNC and BSC minima
        return self.rho_awgnc_infinite or self.rho_bsc_infinite


def bound_gap_report(code: LinearCode, budget: int = DEFAULT_BUDGET) -> BoundGapReport:
    if code.k == 0 or code.k == code.n:
        raise ValueError("need 0 < k < n so that both the code and its dual have a distance")
    big_d = min_distance(code, budget)
    d = min_distance(dual_code(code), budget)
    aub, aw = awgnc_upper_bound(code.n, d)
    bub, bw = bsc_upper_bound(code.n, d)
    return BoundGapReport(code.n, code.k, big_d, d, aub, aw, bub, bw)

