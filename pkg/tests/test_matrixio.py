from __future__ import annotations

import random
import re

import pytest

from pwlab.constructions import hamming_parity_check
from pwlab.errors import ParseError
from pwlab.gf2core import BinaryMatrix
from pwlab.matrixio import format_alist, format_dense, format_matrix, parse_alist, parse_dense, parse_matrix, read_matrix

HAMMING_ALIST = """7 3
3 4
1 1 2 1 2 2 3
4 4 4
3 0 0
2 0 0
2 3 0
1 0 0
1 3 0
1 2 0
1 2 3
4 5 6 7
2 3 6 7
1 3 5 7
"""


def test_format_alist_hamming():
    assert format_alist(hamming_parity_check(3)) == HAMMING_ALIST


def test_alist_without_padding():
    unpadded = re.sub(r"( 0)+\n", "\n", HAMMING_ALIST)
    assert unpadded != HAMMING_ALIST
    assert parse_alist(unpadded) == hamming_parity_check(3)


def test_dense_compact_rows():
    assert parse_dense("2 3\n110\n011\n") == BinaryMatrix.from_lists([[1, 1, 0], [0, 1, 1]])


def test_auto_detection():
    h = hamming_parity_check(3)
    assert parse_matrix(format_dense(h)) == h
    assert parse_matrix(format_alist(h)) == h


def test_random_round_trips():
    rng = random.Random(21)
    for _ in range(200):
        n, m = rng.randint(1, 12), rng.randint(1, 8)
        h = BinaryMatrix(n, tuple(rng.getrandbits(n) for _ in range(m)))
        assert parse_dense(format_dense(h)) == h
        assert parse_alist(format_alist(h)) == h
        assert format_dense(parse_alist(format_alist(h))) == format_dense(h)


@pytest.mark.parametrize("text", [
    "",
    "2 3\n1 1 1\n",
    "1 3\n1 2 1\n",
    "1 3\n1 1\n",
    "x 3\n1 1 1\n",
])
def test_dense_errors(text):
    with pytest.raises(ParseError):
        parse_dense(text)


@pytest.mark.parametrize("mutate", [
    lambda s: s.replace("4 4 4", "4 4 3", 1),
    lambda s: s.replace("4 5 6 7", "4 5 6 9", 1),
    lambda s: s.replace("1 3 5 7", "1 3 5 6", 1),
    lambda s: "\n".join(s.splitlines()[:-1]),
])
def test_alist_errors(mutate):
    with pytest.raises(ParseError):
        parse_alist(mutate(HAMMING_ALIST))


def test_read_matrix_missing(tmp_path):
    with pytest.raises(ParseError):
        read_matrix(tmp_path / "nope")
    p = tmp_path / "ok.alist"
    p.write_text(HAMMING_ALIST)
    assert read_matrix(p, "alist") == hamming_parity_check(3)
    with pytest.raises(ValueError):
        format_matrix(hamming_parity_check(3), "xml")
