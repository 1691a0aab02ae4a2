"""Pseudocodeword redundancy: finiteness, exact search, and exhaustive checks.

Candidate parity-check matrices of a code C are sets of distinct nonzero
dual codewords of rank n - k.  Repeating a row adds only copies of
inequalities already present (a check's inequalities depend on its support
alone), so duplicate-free matrices lose nothing.

Adding rows only adds inequalities, so K(H) shrinks and every minimum
pseudoweight grows.  Every candidate is a subset of the matrix of all
nonzero dual codewords, which therefore has the largest minima; the
redundancy is finite exactly when that matrix reaches D.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .cone import DEFAULT_GUARD, extreme_rays, fundamental_cone
from .constructions import all_dual_codewords_matrix
from .errors import BudgetExceeded, DimensionGuard
from .gf2core import DEFAULT_BUDGET, BinaryMatrix, LinearCode, lex_key, min_distance, permute_bits, rank
from .weights import CHANNELS, INF, PseudoweightReport, min_pseudoweights, normalize_channels

DEFAULT_MATRIX_BUDGET = 10**6
MAX_AUTOMORPHISM_N = 9


@dataclass
class RedundancyResult:
    channel: str
    rho: int | float | None  # INF when no parity-check matrix reaches D; None if undecided
    d: int
    witness_matrix: BinaryMatrix | None = None
    matrices_examined: int = 0
    budget_hit: bool = False
    lower_bound: int | None = None

    @property
    def finite(self) -> bool:
        return self.rho is not None and self.rho != INF


def _channel(channel: str) -> str:
    (ch,) = normalize_channels([channel])
    return ch


def _dual_words(code: LinearCode) -> list[int]:
    return list(all_dual_codewords_matrix(code).rows)


def channel_minimum(h: BinaryMatrix, channel: str, guard: int = DEFAULT_GUARD):
    return min_pseudoweights(h, [channel], guard=guard).minima[channel]


def redundancy_is_finite(code: LinearCode, channel: str, guard: int = DEFAULT_GUARD) -> bool:
    """True iff the all-dual-codewords matrix reaches minimum pseudoweight D."""
    ch = _channel(channel)
    return channel_minimum(all_dual_codewords_matrix(code), ch, guard) == min_distance(code)


def candidate_matrices(code: LinearCode, m: int, words: Sequence[int] | None = None) -> Iterator[BinaryMatrix]:
    """Rank-(n-k) matrices of ``m`` distinct nonzero dual codewords, lexicographic over row sets."""
    if words is None:
        words = _dual_words(code)
    r = code.n - code.k
    for combo in itertools.combinations(words, m):
        if rank(combo, code.n) == r:
            yield BinaryMatrix(code.n, combo)


def pseudoredundancy(
    code: LinearCode,
    channel: str,
    budget: int = DEFAULT_MATRIX_BUDGET,
    guard: int = DEFAULT_GUARD,
) -> RedundancyResult:
    """Smallest number of rows of a parity-check matrix whose ``channel`` minimum equals D.

    Row counts are tried from n - k upward; the witness is the
    lexicographically first row set of the winning size.  Raises
    BudgetExceeded (with ``partial`` holding the lower bound reached) once
    more than ``budget`` candidate matrices would be evaluated.
    """
    ch = _channel(channel)
    big_d = min_distance(code)
    r = code.n - code.k
    words = _dual_words(code)
    if code.n > guard:
        raise DimensionGuard(f"cone dimension {code.n} exceeds guard {guard}")
    if r == 0:
        # only the empty matrix; K(H) is the whole orthant
        full = BinaryMatrix(code.n, ())
        ok = channel_minimum(full, ch, guard) == big_d
        return RedundancyResult(ch, 0 if ok else INF, big_d, full if ok else None, 1)
    if channel_minimum(BinaryMatrix(code.n, tuple(words)), ch, guard) != big_d:
        return RedundancyResult(ch, INF, big_d, None, 1)
    examined = 0
    for m in range(r, len(words) + 1):
        for h in candidate_matrices(code, m, words):
            examined += 1
            if examined > budget:
                partial = RedundancyResult(ch, None, big_d, None, examined - 1, True, m)
                raise BudgetExceeded(f"more than {budget} candidate matrices; rho >= {m}", partial)
            if channel_minimum(h, ch, guard) == big_d:
                return RedundancyResult(ch, m, big_d, h, examined, False, m)
    raise AssertionError("the all-dual matrix reaches D, so some row count must")


def all_redundancies(code: LinearCode, channels=None, budget: int = DEFAULT_MATRIX_BUDGET) -> dict[str, RedundancyResult]:
    return {ch: pseudoredundancy(code, ch, budget) for ch in normalize_channels(channels)}


Predicate = Callable[[PseudoweightReport], bool]


def min_at_least(channel: str, threshold) -> Predicate:
    ch = _channel(channel)
    t = Fraction(threshold)

    def pred(report: PseudoweightReport) -> bool:
        return report.minima[ch] >= t

    pred.channels = (ch,)
    pred.description = f"{ch}_min >= {threshold}"
    return pred


@dataclass
class PropertyResult:
    holds: bool
    counterexample: BinaryMatrix | None
    report: PseudoweightReport | None
    matrices_examined: int


def exhaustive_matrix_property(
    code: LinearCode,
    predicate: Predicate,
    budget: int = DEFAULT_MATRIX_BUDGET,
    guard: int = DEFAULT_GUARD,
) -> PropertyResult:
    """Check ``predicate`` on every duplicate-free parity-check matrix built from dual codewords.

    Matrices are visited by row count, then lexicographically; the first
    failure is returned as the counterexample.
    """
    channels = getattr(predicate, "channels", CHANNELS)
    words = _dual_words(code)
    examined = 0
    for m in range(code.n - code.k, len(words) + 1):
        for h in candidate_matrices(code, m, words):
            examined += 1
            if examined > budget:
                raise BudgetExceeded(f"more than {budget} candidate matrices")
            rep = min_pseudoweights(h, channels, d=code._min_distance, guard=guard)
            if not predicate(rep):
                return PropertyResult(False, h, rep, examined)
    return PropertyResult(True, None, None, examined)


def automorphism_group(code: LinearCode, max_n: int = MAX_AUTOMORPHISM_N) -> list[tuple[int, ...]]:
    """Column permutations mapping ``code`` onto itself, by brute force over S_n."""
    n = code.n
    if n > max_n:
        raise DimensionGuard(f"brute-force automorphisms limited to n <= {max_n}")
    gens = code.generator_basis
    group = []
    for perm in itertools.permutations(range(n)):
        if all(code.contains(permute_bits(g, perm)) for g in gens):
            group.append(perm)
    return group


def canonical_row_set(rows: Sequence[int], n: int, group: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Smallest sorted image of a row set under ``group``; equal iff equivalent."""
    best = None
    for perm in group:
        img = tuple(sorted(lex_key(permute_bits(r, perm), n) for r in rows))
        if best is None or img < best:
            best = img
    return best


@dataclass
class OrbitCount:
    count: int
    representatives: list[BinaryMatrix] = field(default_factory=list)
    matrices_matching: int = 0
    matrices_examined: int = 0


def count_distinct_optimal_matrices(
    code: LinearCode,
    m: int,
    channel: str,
    target,
    guard: int = DEFAULT_GUARD,
) -> OrbitCount:
    """Equivalence classes of m-row candidate matrices whose ``channel`` minimum equals ``target``.

    Row order is immaterial (row sets), and columns are identified under
    the automorphism group of the code.  Each class is represented by its
    lexicographically first member.
    """
    ch = _channel(channel)
    group = automorphism_group(code)
    classes: dict[tuple[int, ...], BinaryMatrix] = {}
    matching = examined = 0
    for h in candidate_matrices(code, m):
        examined += 1
        if channel_minimum(h, ch, guard) != target:
            continue
        matching += 1
        key = canonical_row_set(h.rows, code.n, group)
        classes.setdefault(key, h)
    reps = list(classes.values())
    return OrbitCount(len(reps), reps, matching, examined)


def is_finite(value) -> bool:
    return value is not None and not (isinstance(value, float) and math.isinf(value))
