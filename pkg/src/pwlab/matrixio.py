"""Reading and writing parity-check matrices in alist and dense text form.

alist (MacKay's sparse format)::

    n m
    max_col_degree max_row_degree
    <n column degrees>
    <m row degrees>
    <n lines: 1-based row indices per column, zero-padded to max_col_degree>
    <m lines: 1-based column indices per row, zero-padded to max_row_degree>

dense::

    m n
    <m lines of n space-separated 0/1 entries>
"""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError
from .gf2core import BinaryMatrix


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(t) for t in line.split()]
    except ValueError as exc:
        raise ParseError(f"line {lineno}: non-integer token") from exc


def parse_dense(text: str) -> BinaryMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty matrix file")
    header = _ints(lines[0], 1)
    if len(header) != 2 or min(header) < 0:
        raise ParseError("dense header must be 'm n'")
    m, n = header
    if len(lines) - 1 != m:
        raise ParseError(f"dense header announces {m} rows, found {len(lines) - 1}")
    rows = []
    for idx, ln in enumerate(lines[1:], start=2):
        toks = ln.split()
        if len(toks) == 1 and n > 1:
            toks = list(toks[0])
        if len(toks) != n or any(t not in ("0", "1") for t in toks):
            raise ParseError(f"line {idx}: expected {n} entries in {{0, 1}}")
        rows.append([int(t) for t in toks])
    return BinaryMatrix.from_lists(rows, n_cols=n)


def parse_alist(text: str) -> BinaryMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2:
        raise ParseError("alist needs at least a dimension and a degree line")
    tokens = []
    for idx, ln in enumerate(lines, start=1):
        tokens.extend(_ints(ln, idx))
    if len(tokens) < 4:
        raise ParseError("truncated alist header")
    n, m, maxc, maxr = tokens[:4]
    if min(n, m, maxc, maxr) < 0:
        raise ParseError("negative size in alist header")
    pos = 4
    col_deg = tokens[pos:pos + n]
    pos += n
    row_deg = tokens[pos:pos + m]
    pos += m
    if len(col_deg) != n or len(row_deg) != m:
        raise ParseError("truncated degree lists")
    if any(d < 0 or d > maxc for d in col_deg) or any(d < 0 or d > maxr for d in row_deg):
        raise ParseError("degree exceeds the announced maximum")
    body = tokens[pos:]
    if len(body) == n * maxc + m * maxr:
        col_width, row_width = [maxc] * n, [maxr] * m
    elif len(body) == sum(col_deg) + sum(row_deg):
        col_width, row_width = col_deg, row_deg
    else:
        raise ParseError("alist adjacency lists do not match the degree lines")

    def read_lists(widths, degs, bound, what):
        out = []
        at = 0
        for k, (wdt, deg) in enumerate(zip(widths, degs)):
            chunk = body[at:at + wdt]
            at += wdt
            idx = [v for v in chunk if v != 0]
            if len(idx) != deg:
                raise ParseError(f"{what} {k + 1}: {len(idx)} entries, degree line says {deg}")
            if any(v < 1 or v > bound for v in idx) or len(set(idx)) != len(idx):
                raise ParseError(f"{what} {k + 1}: index out of range or repeated")
            out.append(idx)
        del body[:at]
        return out

    cols = read_lists(col_width, col_deg, m, "column")
    rows = read_lists(row_width, row_deg, n, "row")
    mat_rows = [0] * m
    for j, idx in enumerate(rows):
        for i in idx:
            mat_rows[j] |= 1 << (i - 1)
    check = [0] * m
    for i, idx in enumerate(cols):
        for j in idx:
            check[j - 1] |= 1 << i
    if check != mat_rows:
        raise ParseError("column and row adjacency lists disagree")
    return BinaryMatrix(n, tuple(mat_rows))


def parse_matrix(text: str, fmt: str = "auto") -> BinaryMatrix:
    """Parse ``text`` as ``dense``, ``alist`` or, with ``auto``, whichever fits.

    A dense file has exactly m + 1 nonblank lines; an alist has n + m + 4.
    """
    if fmt == "dense":
        return parse_dense(text)
    if fmt == "alist":
        return parse_alist(text)
    if fmt != "auto":
        raise ValueError(f"unknown matrix format {fmt!r}")
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty matrix file")
    header = _ints(lines[0], 1)
    if len(header) != 2:
        raise ParseError("first line must hold two integers")
    if len(lines) == header[0] + 1:
        return parse_dense(text)
    return parse_alist(text)


def read_matrix(path: str | Path, fmt: str = "auto") -> BinaryMatrix:
    try:
        text = Path(path).read_text()
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_matrix(text, fmt)


def format_dense(h: BinaryMatrix) -> str:
    out = [f"{h.n_rows} {h.n_cols}"]
    for row in h.to_lists():
        out.append(" ".join(str(b) for b in row))
    return "\n".join(out) + "\n"


def format_alist(h: BinaryMatrix) -> str:
    n, m = h.n_cols, h.n_rows
    cols = [h.checks_on_col(i) for i in range(n)]
    rows = [h.support_of_row(j) for j in range(m)]
    maxc = max((len(c) for c in cols), default=0)
    maxr = max((len(r) for r in rows), default=0)

    def padded(idx, width):
        vals = [str(v + 1) for v in idx] + ["0"] * (width - len(idx))
        return " ".join(vals)

    out = [f"{n} {m}", f"{maxc} {maxr}"]
    out.append(" ".join(str(len(c)) for c in cols))
    out.append(" ".join(str(len(r)) for r in rows))
    out.extend(padded(c, maxc) for c in cols)
    out.extend(padded(r, maxr) for r in rows)
    return "\n".join(out) + "\n"


def format_matrix(h: BinaryMatrix, fmt: str) -> str:
    if fmt == "dense":
        return format_dense(h)
    if fmt == "alist":
        return format_alist(h)
    raise ValueError(f"unknown matrix format {fmt!r}")
