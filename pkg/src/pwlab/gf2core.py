"""Linear algebra over GF(2) on int bitsets.

A bit-vector of length ``n`` is a Python int whose bit ``i`` holds
coordinate ``i``.  Lexicographic order of bit-vectors compares coordinate 0
first (so ``0110 < 1000``); :func:`lex_key` produces a sortable int for it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import BudgetExceeded

DEFAULT_BUDGET = 2**28

# numpy route for codeword enumeration needs n < 64 so words fit in uint64
_NP_MAX_N = 63
_NP_CHUNK_BITS = 20


def weight(v: int) -> int:
    return v.bit_count()


def to_bits(v: int, n: int) -> tuple[int, ...]:
    return tuple((v >> i) & 1 for i in range(n))


def from_bits(bits: Iterable[int]) -> int:
    v = 0
    for i, b in enumerate(bits):
        if b not in (0, 1, True, False):
            raise ValueError(f"entry {b!r} is not a bit")
        if b:
            v |= 1 << i
    return v


def support(v: int) -> list[int]:
    out = []
    i = 0
    while v:
        if v & 1:
            out.append(i)
        v >>= 1
        i += 1
    return out


def lex_key(v: int, n: int) -> int:
    """Sort key realising lexicographic order (coordinate 0 most significant)."""
    r = 0
    for i in range(n):
        r = (r << 1) | ((v >> i) & 1)
    return r


def bitstring(v: int, n: int) -> str:
    return "".join("1" if (v >> i) & 1 else "0" for i in range(n))


@dataclass(frozen=True)
class BinaryMatrix:
    """Dense m x n matrix over GF(2), one int bitset per row."""

    n_cols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        limit = 1 << self.n_cols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ValueError(f"row {r:#x} does not fit in {self.n_cols} columns")

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]], n_cols: int | None = None) -> "BinaryMatrix":
        rows = [list(r) for r in rows]
        if n_cols is None:
            if not rows:
                raise ValueError("n_cols is required for a matrix without rows")
            n_cols = len(rows[0])
        for r in rows:
            if len(r) != n_cols:
                raise ValueError(f"row of length {len(r)} in a {n_cols}-column matrix")
        return cls(n_cols, tuple(from_bits(r) for r in rows))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "BinaryMatrix":
        return cls(n_cols, (0,) * n_rows)

    @classmethod
    def identity(cls, n: int) -> "BinaryMatrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.n_cols)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        j, i = idx
        return (self.rows[j] >> i) & 1

    def to_lists(self) -> list[list[int]]:
        return [list(to_bits(r, self.n_cols)) for r in self.rows]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.to_lists(), dtype=np.int64).reshape(self.n_rows, self.n_cols)

    def support_of_row(self, j: int) -> list[int]:
        return support(self.rows[j])

    def checks_on_col(self, i: int) -> list[int]:
        return [j for j, r in enumerate(self.rows) if (r >> i) & 1]

    def row_weights(self) -> list[int]:
        return [weight(r) for r in self.rows]

    def col_weights(self) -> list[int]:
        return [len(self.checks_on_col(i)) for i in range(self.n_cols)]

    def transpose(self) -> "BinaryMatrix":
        cols = []
        for i in range(self.n_cols):
            v = 0
            for j, r in enumerate(self.rows):
                if (r >> i) & 1:
                    v |= 1 << j
            cols.append(v)
        return BinaryMatrix(self.n_rows, tuple(cols))

    def permute_columns(self, perm: Sequence[int]) -> "BinaryMatrix":
        """Column ``i`` of the input becomes column ``perm[i]``."""
        return BinaryMatrix(self.n_cols, tuple(permute_bits(r, perm) for r in self.rows))

    def sorted_rows(self) -> "BinaryMatrix":
        return BinaryMatrix(self.n_cols, tuple(sorted(self.rows, key=lambda r: lex_key(r, self.n_cols))))

    def __str__(self) -> str:
        return "\n".join(bitstring(r, self.n_cols) for r in self.rows)


def permute_bits(v: int, perm: Sequence[int]) -> int:
    out = 0
    for i, p in enumerate(perm):
        if (v >> i) & 1:
            out |= 1 << p
    return out


def row_reduce(rows: Iterable[int], n: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; pivots are chosen at the lowest column index.

    Returns the nonzero reduced rows and their pivot columns, both ordered by
    pivot column.
    """
    work = [r for r in rows if r]
    basis: list[int] = []
    pivots: list[int] = []
    for col in range(n):
        bit = 1 << col
        p = next((idx for idx, r in enumerate(work) if r & bit), None)
        if p is None:
            continue
        prow = work.pop(p)
        work = [r ^ prow if r & bit else r for r in work]
        basis = [b ^ prow if b & bit else b for b in basis]
        basis.append(prow)
        pivots.append(col)
        work = [r for r in work if r]
        if not work:
            break
    return basis, pivots


def rank(m: BinaryMatrix | Sequence[int], n: int | None = None) -> int:
    if isinstance(m, BinaryMatrix):
        rows, n = m.rows, m.n_cols
    else:
        rows = list(m)
        if n is None:
            n = max((r.bit_length() for r in rows), default=0)
    # plain elimination suffices for rank; no back-substitution
    work = [r for r in rows if r]
    rk = 0
    while work:
        prow = work.pop()
        low = prow & -prow
        work = [r ^ prow if r & low else r for r in work]
        work = [r for r in work if r]
        rk += 1
    return rk


def nullspace(rows: Iterable[int], n: int) -> list[int]:
    """Basis of {c : <r, c> = 0 for every row r}, one vector per free column."""
    basis, pivots = row_reduce(rows, n)
    pivot_set = set(pivots)
    out = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = 1 << f
        for r, p in zip(basis, pivots):
            if (r >> f) & 1:
                v |= 1 << p
        out.append(v)
    return out


def dot(a: int, b: int) -> int:
    return (a & b).bit_count() & 1


def span(gens: Sequence[int]) -> Iterator[int]:
    """All 2^k combinations of ``gens`` in Gray-code order (starting at 0)."""
    v = 0
    yield v
    for i in range(1, 1 << len(gens)):
        v ^= gens[(i & -i).bit_length() - 1]
        yield v


@dataclass
class LinearCode:
    """Binary linear [n, k] code carried by a generator basis and a parity basis."""

    n: int
    generator_basis: tuple[int, ...]
    parity_basis: tuple[int, ...]
    _min_distance: int | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.generator_basis = tuple(self.generator_basis)
        self.parity_basis = tuple(self.parity_basis)

    @classmethod
    def from_generator(cls, rows: Iterable[int], n: int) -> "LinearCode":
        gen, _ = row_reduce(rows, n)
        par, _ = row_reduce(nullspace(gen, n), n)
        return cls(n, tuple(gen), tuple(par))

    @property
    def k(self) -> int:
        return len(self.generator_basis)

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    @property
    def rate(self) -> float:
        return self.k / self.n

    @property
    def min_distance(self) -> int | None:
        """Cached D, or None when not yet computed (see :func:`min_distance`)."""
        return self._min_distance

    def generator_matrix(self) -> BinaryMatrix:
        return BinaryMatrix(self.n, self.generator_basis)

    def parity_matrix(self) -> BinaryMatrix:
        return BinaryMatrix(self.n, self.parity_basis)

    def contains(self, v: int) -> bool:
        return all(dot(v, p) == 0 for p in self.parity_basis)

    def codewords(self) -> Iterator[int]:
        return span(self.generator_basis)

    def canonical(self) -> tuple[int, ...]:
        return tuple(row_reduce(self.generator_basis, self.n)[0])

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.n == other.n and self.canonical() == other.canonical()

    def __hash__(self):
        return hash((self.n, self.canonical()))

    def __repr__(self):
        d = self._min_distance
        return f"LinearCode[{self.n},{self.k}{',' + str(d) if d is not None else ''}]"


def kernel_code(h: BinaryMatrix) -> LinearCode:
    par, _ = row_reduce(h.rows, h.n_cols)
    gen, _ = row_reduce(nullspace(par, h.n_cols), h.n_cols)
    return LinearCode(h.n_cols, tuple(gen), tuple(par))


def dual_code(code: LinearCode) -> LinearCode:
    return LinearCode(code.n, code.parity_basis, code.generator_basis)


def is_parity_check_for(h: BinaryMatrix, code: LinearCode) -> bool:
    if h.n_cols != code.n:
        return False
    if rank(h) != code.n - code.k:
        return False
    return all(dot(r, g) == 0 for r in h.rows for g in code.generator_basis)


def _check_budget(code: LinearCode, budget: int) -> None:
    if (1 << code.k) > budget:
        raise BudgetExceeded(f"2^{code.k} codewords exceed budget {budget}")


def _np_words(gens: Sequence[int]) -> np.ndarray:
    arr = np.zeros(1, dtype=np.uint64)
    for g in gens:
        arr = np.concatenate([arr, arr ^ np.uint64(g)])
    return arr


def _min_weight_enumerate(code: LinearCode) -> int:
    gens = list(code.generator_basis)
    if code.n > _NP_MAX_N:
        return min(weight(c) for c in itertools.islice(span(gens), 1, None))
    lo, hi = gens[:_NP_CHUNK_BITS], gens[_NP_CHUNK_BITS:]
    words = _np_words(lo)
    best = int(np.bitwise_count(words[1:]).min()) if len(words) > 1 else code.n + 1
    offset = 0
    for i in range(1, 1 << len(hi)):
        offset ^= hi[(i & -i).bit_length() - 1]
        best = min(best, int(np.bitwise_count(words ^ np.uint64(offset)).min()))
        if best == 1:
            break
    return best


def _min_weight_syndrome(code: LinearCode, max_cost: int) -> int | None:
    """Smallest w with a weight-w word of zero syndrome, or None past ``max_cost``.

    Visits error patterns in increasing weight, so the first hit is D.
    """
    n = code.n
    cols = []
    for i in range(n):
        s = 0
        for j, p in enumerate(code.parity_basis):
            if (p >> i) & 1:
                s |= 1 << j
        cols.append(s)
    cost = 0
    for w in range(1, n + 1):
        for combo in itertools.combinations(cols, w):
            cost += 1
            s = 0
            for c in combo:
                s ^= c
            if s == 0:
                return w
            if cost > max_cost:
                return None
    return None


def min_distance(code: LinearCode, budget: int = DEFAULT_BUDGET) -> int:
    """Exact minimum distance, cached on ``code``.

    Two exhaustive routes: all 2^k codewords (Gray-code order, numpy-batched),
    or all low-weight error patterns by increasing weight.  The cheaper is
    tried first; raises BudgetExceeded when 2^k exceeds ``budget``.
    """
    if code._min_distance is not None:
        return code._min_distance
    if code.k == 0:
        raise ValueError("the zero code has no minimum distance")
    _check_budget(code, budget)
    d = None
    if code.k > 16:
        d = _min_weight_syndrome(code, (1 << code.k) >> 6)
    if d is None:
        d = _min_weight_enumerate(code)
    code._min_distance = d
    return d


def codewords_of_weight(code: LinearCode, w: int, budget: int = DEFAULT_BUDGET) -> list[int]:
    """All codewords of Hamming weight ``w`` in lexicographic order."""
    if w == 0:
        return [0]
    if w > code.n:
        return []
    _check_budget(code, budget)
    if code.n <= _NP_MAX_N:
        words = _np_words(code.generator_basis)
        hits = [int(x) for x in words[np.bitwise_count(words) == w]]
    else:
        hits = [c for c in code.codewords() if weight(c) == w]
    return sorted(hits, key=lambda v: lex_key(v, code.n))


def all_codewords(code: LinearCode, budget: int = DEFAULT_BUDGET) -> list[int]:
    """Every codeword (including 0) in lexicographic order."""
    _check_budget(code, budget)
    return sorted(code.codewords(), key=lambda v: lex_key(v, code.n))
