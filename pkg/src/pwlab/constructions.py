"""Builders for the codes and parity-check matrices studied here."""

from __future__ import annotations

import re
from typing import Sequence

from .errors import BudgetExceeded, ParseError
from .gf2core import (
    DEFAULT_BUDGET,
    BinaryMatrix,
    LinearCode,
    all_codewords,
    codewords_of_weight,
    dual_code,
    from_bits,
    kernel_code,
    min_distance,
)

# x^11 + x^9 + x^7 + x^6 + x^5 + x + 1, a degree-11 factor of x^23 - 1
GOLAY23_GENERATOR = (1 << 11) | (1 << 9) | (1 << 7) | (1 << 6) | (1 << 5) | (1 << 1) | 1

MAX_DUAL_REDUNDANCY = 20


def hamming_parity_check(m: int) -> BinaryMatrix:
    """m x (2^m - 1) matrix; column i holds i+1 in binary, row 0 the most significant bit."""
    if m < 2:
        raise ValueError("m must be at least 2")
    n = (1 << m) - 1
    rows = []
    for j in range(m):
        shift = m - 1 - j
        rows.append(sum(1 << i for i in range(n) if ((i + 1) >> shift) & 1))
    return BinaryMatrix(n, tuple(rows))


def rotate(v: int, s: int, n: int) -> int:
    """Cyclic shift moving coordinate i to coordinate i + s (mod n)."""
    s %= n
    mask = (1 << n) - 1
    return ((v << s) | (v >> (n - s))) & mask if s else v


def circulant(c: Sequence[int] | int, n: int | None = None) -> BinaryMatrix:
    """n x n matrix whose row j is ``c`` cyclically shifted by j positions.

    ``c`` is a bit sequence, or an int bitset together with ``n``.
    """
    if isinstance(c, int):
        if n is None:
            raise ValueError("n is required when c is given as an int")
        v = c
    else:
        n = len(c)
        v = from_bits(c)
    if n < 1:
        raise ValueError("empty circulant")
    return BinaryMatrix(n, tuple(rotate(v, j, n) for j in range(n)))


def all_dual_codewords_matrix(code: LinearCode) -> BinaryMatrix:
    """Every nonzero codeword of the dual code as a row, in lexicographic order."""
    r = code.n - code.k
    if r > MAX_DUAL_REDUNDANCY:
        raise BudgetExceeded(f"2^{r}-1 dual codewords exceed the row limit")
    words = all_codewords(dual_code(code))
    return BinaryMatrix(code.n, tuple(w for w in words if w))


def weight_w_dual_matrix(code: LinearCode, w: int, budget: int = DEFAULT_BUDGET) -> BinaryMatrix:
    """Rows are the weight-``w`` dual codewords.

    The result need not be a parity-check matrix of ``code``; check with
    :func:`pwlab.gf2core.is_parity_check_for`.
    """
    if w == 0:
        return BinaryMatrix(code.n, ())
    return BinaryMatrix(code.n, tuple(codewords_of_weight(dual_code(code), w, budget)))


def hamming_code(m: int) -> LinearCode:
    code = kernel_code(hamming_parity_check(m))
    code._min_distance = 3
    return code


def simplex_code(m: int) -> LinearCode:
    code = dual_code(hamming_code(m))
    code._min_distance = 1 << (m - 1)
    return code


def extend_by_parity(code: LinearCode) -> LinearCode:
    n = code.n
    rows = [g | ((g.bit_count() & 1) << n) for g in code.generator_basis]
    return LinearCode.from_generator(rows, n + 1)


def shorten(code: LinearCode, position: int | None = None) -> LinearCode:
    """Keep codewords that vanish at ``position`` (default last) and delete it."""
    n = code.n
    pos = n - 1 if position is None else position
    sub = kernel_code(BinaryMatrix(n, code.parity_basis + (1 << pos,)))
    low = (1 << pos) - 1
    rows = [(g & low) | ((g >> (pos + 1)) << pos) for g in sub.generator_basis]
    return LinearCode.from_generator(rows, n - 1)


def repetition_code(n: int) -> LinearCode:
    if n < 1:
        raise ValueError("length must be positive")
    code = LinearCode.from_generator([(1 << n) - 1], n)
    code._min_distance = n
    return code


def golay23() -> LinearCode:
    n = 23
    rows = [GOLAY23_GENERATOR << i for i in range(12)]
    code = LinearCode.from_generator(rows, n)
    if min_distance(code) != 7 or min_distance(dual_code(code)) != 8:
        raise AssertionError("Golay generator polynomial does not give a [23,12,7] code")
    return code


def golay24() -> LinearCode:
    code = extend_by_parity(golay23())
    if min_distance(code) != 8:
        raise AssertionError("extended Golay code does not have distance 8")
    return code


_NAMED = {
    "hamming": hamming_code,
    "simplex": simplex_code,
    "extended_hamming": lambda m: extend_by_parity(hamming_code(m)),
    "shortened_hamming": lambda m: shorten(hamming_code(m)),
    "repetition": repetition_code,
}


def named_code(name: str, param: int | None = None) -> LinearCode:
    """Build a code from ``"hamming 3"``, ``"golay23"`` and similar names.

    Accepted families: hamming m, simplex m, extended_hamming m,
    shortened_hamming m, repetition n, golay23, golay24.
    """
    if param is None:
        parts = name.replace(":", " ").split()
        if not parts:
            raise ParseError("empty code name")
        name = parts[0]
        if len(parts) == 2:
            if not re.fullmatch(r"\d+", parts[1]):
                raise ParseError(f"bad code parameter {parts[1]!r}")
            param = int(parts[1])
        elif len(parts) > 2:
            raise ParseError(f"cannot parse code name {' '.join(parts)!r}")
    name = name.lower().replace("-", "_")
    if name in ("golay23", "golay24"):
        if param is not None:
            raise ParseError(f"{name} takes no parameter")
        return golay23() if name == "golay23" else golay24()
    if name not in _NAMED:
        raise ParseError(f"unknown code family {name!r}")
    if param is None:
        raise ParseError(f"{name} needs an integer parameter")
    try:
        return _NAMED[name](param)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
