"""Cyclic codes, their full circulant parity-check matrices, and the eigenvalue-bound scan."""

from __future__ import annotations

import csv
import io
import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable

from .bounds import circulant_eigenvalue_bound, tanner_connected
from .constructions import circulant
from .errors import BudgetExceeded, DegenerateSpectrum, Disconnected
from .gf2core import LinearCode, kernel_code, min_distance

MEETS_TOL = 1e-6
DEFAULT_NMAX = 63
DEFAULT_KBUDGET = 28


# --- GF(2)[x] on ints: bit i is the coefficient of x^i -------------------


def pdeg(a: int) -> int:
    return a.bit_length() - 1


def pmul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def pdivmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    q = 0
    db = pdeg(b)
    while a and pdeg(a) >= db:
        s = pdeg(a) - db
        q |= 1 << s
        a ^= b << s
    return q, a


def pmod(a: int, b: int) -> int:
    return pdivmod(a, b)[1]


def pgcd(a: int, b: int) -> int:
    while b:
        a, b = b, pmod(a, b)
    return a


def pmulmod(a: int, b: int, m: int) -> int:
    return pmod(pmul(a, b), m)


def ppowmod(a: int, e: int, m: int) -> int:
    result = 1
    a = pmod(a, m)
    while e:
        if e & 1:
            result = pmulmod(result, a, m)
        a = pmulmod(a, a, m)
        e >>= 1
    return result


def pderiv(a: int) -> int:
    # d/dx x^i = i x^(i-1): only odd powers survive mod 2
    out = 0
    i = 1
    a >>= 1
    while a:
        if a & 1:
            out |= 1 << (i - 1)
        a >>= 2
        i += 2
    return out


def psqrt(a: int) -> int:
    """Square root of a polynomial with only even powers."""
    out = 0
    i = 0
    while a:
        if a & 1:
            out |= 1 << i
        a >>= 2
        i += 1
    return out


def reciprocal(a: int) -> int:
    d = pdeg(a)
    return sum(1 << (d - i) for i in range(d + 1) if (a >> i) & 1)


def pstr(a: int) -> str:
    if a == 0:
        return "0"
    terms = []
    for i in range(pdeg(a), -1, -1):
        if (a >> i) & 1:
            terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
    return "+".join(terms)


@dataclass(frozen=True, order=True)
class GF2Polynomial:
    """Polynomial over GF(2); ``coeffs`` bit i is the coefficient of x^i."""

    coeffs: int

    @property
    def degree(self) -> int:
        return pdeg(self.coeffs)

    def __mul__(self, other: "GF2Polynomial") -> "GF2Polynomial":
        return GF2Polynomial(pmul(self.coeffs, other.coeffs))

    def __floordiv__(self, other: "GF2Polynomial") -> "GF2Polynomial":
        return GF2Polynomial(pdivmod(self.coeffs, other.coeffs)[0])

    def __mod__(self, other: "GF2Polynomial") -> "GF2Polynomial":
        return GF2Polynomial(pmod(self.coeffs, other.coeffs))

    def reciprocal(self) -> "GF2Polynomial":
        return GF2Polynomial(reciprocal(self.coeffs))

    def bits(self, n: int) -> tuple[int, ...]:
        return tuple((self.coeffs >> i) & 1 for i in range(n))

    def __str__(self) -> str:
        return pstr(self.coeffs)


def xn_minus_1(n: int) -> int:
    return (1 << n) | 1


def _squarefree(f: int) -> list[tuple[int, int]]:
    """Squarefree decomposition ``f = prod g_i^e_i`` with each g_i squarefree."""
    if pdeg(f) <= 0:
        return []
    df = pderiv(f)
    if df == 0:
        return [(g, 2 * e) for g, e in _squarefree(psqrt(f))]
    c = pgcd(f, df)
    w = pdivmod(f, c)[0]
    out = []
    i = 1
    while pdeg(w) > 0:
        y = pgcd(w, c)
        z = pdivmod(w, y)[0]
        if pdeg(z) > 0:
            out.append((z, i))
        i += 1
        w = y
        c = pdivmod(c, y)[0]
    if pdeg(c) > 0:
        out.extend((g, 2 * e) for g, e in _squarefree(psqrt(c)))
    return out


def _distinct_degree(f: int) -> list[tuple[int, int]]:
    """Split a squarefree f into (product of all degree-d factors, d)."""
    out = []
    h = 0b10  # x
    d = 0
    while pdeg(f) >= 2 * (d + 1):
        d += 1
        h = pmulmod(h, h, f)  # x^(2^d) mod f
        g = pgcd(f, h ^ 0b10)
        if pdeg(g) > 0:
            out.append((g, d))
            f = pdivmod(f, g)[0]
            h = pmod(h, f)
    if pdeg(f) > 0:
        out.append((f, pdeg(f)))
    return out


def _equal_degree(f: int, d: int, rng: random.Random) -> list[int]:
    """Split f, a product of distinct irreducibles of degree d (Cantor-Zassenhaus, trace map)."""
    if pdeg(f) == d:
        return [f]
    while True:
        a = rng.getrandbits(pdeg(f)) | 1
        t = a
        s = a
        for _ in range(d - 1):
            s = pmulmod(s, s, f)
            t ^= s
        g = pgcd(f, t)
        if 0 < pdeg(g) < pdeg(f):
            return _equal_degree(g, d, rng) + _equal_degree(pdivmod(f, g)[0], d, rng)


def factor(f: int, seed: int = 0) -> list[tuple[int, int]]:
    """Irreducible factorization of ``f`` over GF(2) as sorted (factor, multiplicity) pairs."""
    rng = random.Random(seed)
    out: dict[int, int] = {}
    if f & 1 == 0:
        # powers of x; never occur for x^n - 1 but keep factor() general
        e = (f & -f).bit_length() - 1
        out[0b10] = e
        f >>= e
    for g, e in _squarefree(f):
        for block, d in _distinct_degree(g):
            for p in _equal_degree(block, d, rng):
                out[p] = out.get(p, 0) + e
    return sorted(out.items(), key=lambda pe: (pdeg(pe[0]), pe[0]))


def factor_xn_minus_1(n: int, seed: int = 0) -> list[tuple[GF2Polynomial, int]]:
    """Irreducible factors of x^n - 1 with multiplicities; the product is checked."""
    if n < 1:
        raise ValueError("n must be positive")
    fac = factor(xn_minus_1(n), seed)
    prod = 1
    for p, e in fac:
        for _ in range(e):
            prod = pmul(prod, p)
    if prod != xn_minus_1(n):
        raise AssertionError(f"factorization of x^{n}-1 does not multiply back")
    return [(GF2Polynomial(p), e) for p, e in fac]


def enumerate_cyclic_codes(n: int) -> list[GF2Polynomial]:
    """Generators g | x^n - 1 with 1 <= deg g <= n-1, ordered by degree then coefficients."""
    fac = factor_xn_minus_1(n)
    gens = set()
    for exps in itertools.product(*[range(e + 1) for _, e in fac]):
        g = 1
        for (p, _), a in zip(fac, exps):
            for _ in range(a):
                g = pmul(g, p.coeffs)
        if 1 <= pdeg(g) <= n - 1:
            gens.add(g)
    return [GF2Polynomial(g) for g in sorted(gens, key=lambda g: (pdeg(g), g))]


def cyclic_code(g: GF2Polynomial | int, n: int) -> LinearCode:
    g = g.coeffs if isinstance(g, GF2Polynomial) else g
    q, rem = pdivmod(xn_minus_1(n), g)
    if rem:
        raise ValueError(f"{pstr(g)} does not divide x^{n}-1")
    k = n - pdeg(g)
    return LinearCode.from_generator([g << i for i in range(k)], n)


def circulant_parity_check(g: GF2Polynomial | int, n: int):
    """``(c, H)`` with c the reciprocal of h = (x^n - 1)/g and H = circulant(c).

    The rows of H are the cyclic shifts of h*(x), which generate the dual of
    the code generated by g; the kernel is checked against that code.
    """
    g = g.coeffs if isinstance(g, GF2Polynomial) else g
    h, rem = pdivmod(xn_minus_1(n), g)
    if rem:
        raise ValueError(f"{pstr(g)} does not divide x^{n}-1")
    c = reciprocal(h)
    mat = circulant(c, n)
    if kernel_code(mat) != cyclic_code(g, n):
        raise AssertionError("circulant kernel differs from the cyclic code")
    return c, mat


@dataclass(frozen=True)
class CyclicRecord:
    n: int
    k: int
    d: int | None
    w: int
    connected: bool
    mu1: float | None
    mu2: float | None
    bound: float | None
    meets_bound: bool
    generator: int = 0
    c: int = 0
    note: str = ""

    CSV_FIELDS = ("n", "k", "D", "w", "connected", "mu1", "mu2", "bound", "meets_bound")

    def csv_row(self) -> list[str]:
        def num(x):
            return "" if x is None else format(x, ".12g")

        return [
            str(self.n),
            str(self.k),
            "" if self.d is None else str(self.d),
            str(self.w),
            str(self.connected).lower(),
            num(self.mu1),
            num(self.mu2),
            num(self.bound),
            str(self.meets_bound).lower(),
        ]


def analyze(g: int, n: int, k_budget: int = DEFAULT_KBUDGET) -> CyclicRecord:
    c, mat = circulant_parity_check(g, n)
    k = n - pdeg(g)
    w = c.bit_count()
    notes = []
    d = None
    if k <= k_budget:
        try:
            d = min_distance(cyclic_code(g, n), budget=1 << k_budget)
        except BudgetExceeded:
            notes.append("budget")
    else:
        notes.append("k_budget")
    connected = tanner_connected(mat)
    mu1 = mu2 = bound = None
    if connected:
        try:
            res = circulant_eigenvalue_bound(tuple((c >> i) & 1 for i in range(n)))
            mu1, mu2, bound = res.mu1, res.mu2, res.bound
        except (DegenerateSpectrum, Disconnected) as exc:
            notes.append(type(exc).__name__)
    meets = d is not None and bound is not None and d >= 3 and abs(bound - d) <= MEETS_TOL
    return CyclicRecord(n, k, d, w, connected, mu1, mu2, bound, meets, g, c, ";".join(notes))


def _analyze_star(args):
    return analyze(*args)


def default_workers() -> int:
    env = os.environ.get("PWLAB_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def scan(n_max: int = DEFAULT_NMAX, k_budget: int = DEFAULT_KBUDGET, workers: int = 1, n_min: int = 1) -> list[CyclicRecord]:
    """One record per nontrivial cyclic code of length n_min..n_max, ordered by (n, generator)."""
    jobs = [(g.coeffs, n, k_budget) for n in range(max(1, n_min), n_max + 1) for g in enumerate_cyclic_codes(n)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_analyze_star, jobs, chunksize=8))
    else:
        records = [analyze(*j) for j in jobs]
    return records


def meets_bound_parameters(records: Iterable[CyclicRecord]) -> set[tuple[int, int, int]]:
    return {(r.n, r.k, r.d) for r in records if r.meets_bound}


def write_csv(records: Iterable[CyclicRecord], stream: io.TextIOBase) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CyclicRecord.CSV_FIELDS)
    for r in records:
        writer.writerow(r.csv_row())


__all__ = [
    "CyclicRecord",
    "GF2Polynomial",
    "analyze",
    "circulant_parity_check",
    "cyclic_code",
    "enumerate_cyclic_codes",
    "factor",
    "factor_xn_minus_1",
    "meets_bound_parameters",
    "scan",
    "write_csv",
]
