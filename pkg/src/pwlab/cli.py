"""Command-line front end: ``pwlab pw|redundancy|bounds|cyclic-scan|construct``.

Reports are JSON documents with a fixed key order::

    {"command": [...], "input_digest": "sha256:...", "results": {...}}

Exact rationals are strings ``"p/q"``, infinity is ``"inf"``, and
floating-point spectral values carry 12 significant digits.

Exit codes: 0 ok, 2 input error, 3 budget or guard exceeded, 4 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds as bd
from .constructions import (
    all_dual_codewords_matrix,
    circulant,
    hamming_parity_check,
    named_code,
    weight_w_dual_matrix,
)
from .cyclic import DEFAULT_KBUDGET, default_workers, scan, write_csv
from .errors import BudgetExceeded, DimensionGuard, ParseError, PwlabError
from .gf2core import DEFAULT_BUDGET, BinaryMatrix, LinearCode, bitstring, kernel_code, min_distance
from .matrixio import format_matrix, parse_matrix
from .search import DEFAULT_MATRIX_BUDGET, pseudoredundancy
from .weights import CHANNELS, min_pseudoweights, normalize_channels

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_INTERNAL = 0, 2, 3, 4


def render(value):
    """Map library values onto JSON-safe values with exact rationals as ``p/q``."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return float(format(value, ".12g"))
    if isinstance(value, dict):
        return {k: render(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [render(v) for v in value]
    if isinstance(value, BinaryMatrix):
        return [bitstring(r, value.n_cols) for r in value.rows]
    raise TypeError(f"cannot render {type(value).__name__}")


def rational(value):
    """Exact minima as ``Fraction`` so integers still render as ``p/q``."""
    if isinstance(value, float):
        return value
    return Fraction(value)


def document(argv, digest_source: bytes, results: dict) -> dict:
    return {
        "command": list(argv),
        "input_digest": "sha256:" + hashlib.sha256(digest_source).hexdigest(),
        "results": render(results),
    }


def _load_matrix(path: str, fmt: str) -> tuple[BinaryMatrix, bytes]:
    try:
        data = Path(path).read_bytes()
        text = data.decode()
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_matrix(text, fmt), data


def _code_spec(words: list[str]) -> tuple[LinearCode, bytes]:
    spec = " ".join(words)
    return named_code(spec), spec.encode()


def _text_lines(results: dict, prefix: str = "") -> list[str]:
    out = []
    for k, v in results.items():
        if isinstance(v, dict):
            out.extend(_text_lines(v, f"{prefix}{k}."))
        elif isinstance(v, list):
            out.append(f"{prefix}{k}: " + " ".join(str(x) for x in v))
        else:
            out.append(f"{prefix}{k}: {v}")
    return out


def emit(doc: dict, fmt: str, out) -> None:
    if fmt == "text":
        out.write("\n".join(_text_lines(doc["results"])) + "\n")
    else:
        out.write(json.dumps(doc, indent=2) + "\n")


def cmd_pw(args, argv, out) -> int:
    h, raw = _load_matrix(args.matrix, args.input_format)
    channels = normalize_channels(args.channel)
    rep = min_pseudoweights(h, channels, guard=args.guard)
    results = {"n": rep.n, "m": rep.m, "rays": rep.n_rays, "minima": {}, "witnesses": {}}
    for ch in channels:
        results["minima"][ch] = rational(rep.minima[ch])
        results["witnesses"][ch] = rep.witnesses[ch]
    emit(document(argv, raw, results), args.format, out)
    return EXIT_OK


def cmd_redundancy(args, argv, out) -> int:
    code, raw = _code_spec(args.code)
    results = {"n": code.n, "k": code.k, "D": min_distance(code), "redundancy": {}}
    for ch in normalize_channels(args.channel):
        try:
            res = pseudoredundancy(code, ch, budget=args.budget, guard=args.guard)
            entry = {
                "rho": res.rho,
                "matrices_examined": res.matrices_examined,
                "budget_hit": False,
                "witness": res.witness_matrix,
            }
        except BudgetExceeded as exc:
            part = exc.partial
            entry = {
                "rho": None,
                "lower_bound": part.lower_bound if part else None,
                "matrices_examined": part.matrices_examined if part else None,
                "budget_hit": True,
            }
            results["redundancy"][ch] = entry
            emit(document(argv, raw, results), args.format, out)
            return EXIT_BUDGET
        results["redundancy"][ch] = entry
    emit(document(argv, raw, results), args.format, out)
    return EXIT_OK


def _gap_section(code: LinearCode, budget: int) -> dict:
    try:
        gap = bd.bound_gap_report(code, budget)
    except ValueError as exc:
        return {"error": str(exc)}
    except BudgetExceeded:
        return {"error": "BudgetExceeded"}
    return {
        "D": gap.d_code,
        "dual_distance": gap.d_dual,
        "awgnc_upper_bound": gap.awgnc_ub,
        "bsc_upper_bound": Fraction(gap.bsc_ub),
        "gaps": gap.gaps,
        "rho_awgnc": "inf" if gap.rho_awgnc_infinite else "undecided",
        "rho_bsc": "inf" if gap.rho_bsc_infinite else "undecided",
        "rho_maxfrac": "inf" if gap.rho_maxfrac_infinite else "undecided",
    }


def _matrix_sections(h: BinaryMatrix) -> dict:
    sec = {}
    p = bd.detect_design(h)
    if p is None:
        sec["design"] = None
    else:
        sec["design"] = {
            "kind": p.kind,
            "n": p.n,
            "m": p.m,
            "w_c": p.w_c,
            "w_r": p.w_r,
            "lambda": p.lam,
            "lower_bound": bd.design_lower_bound(p),
        }
    try:
        ev = bd.eigenvalue_bound(h)
        sec["eigenvalue_bound"] = {"mu1": ev.mu1, "mu2": ev.mu2, "w_c": ev.w_c, "w_r": ev.w_r, "bound": ev.bound}
    except (bd.NotRegular, bd.Disconnected, bd.DegenerateSpectrum) as exc:
        sec["eigenvalue_bound"] = {"error": type(exc).__name__}
    return sec


def cmd_bounds(args, argv, out) -> int:
    if args.matrix:
        h, raw = _load_matrix(args.matrix, args.input_format)
        code = kernel_code(h)
        results = {"source": "matrix", "n": code.n, "k": code.k}
        results["distance_bounds"] = _gap_section(code, args.budget)
        results.update(_matrix_sections(h))
    else:
        if not args.code:
            raise ParseError("bounds needs a code name or --matrix")
        code, raw = _code_spec(args.code)
        results = {"source": "code", "n": code.n, "k": code.k}
        results["distance_bounds"] = _gap_section(code, args.budget)
    emit(document(argv, raw, results), args.format, out)
    return EXIT_OK


def cmd_cyclic_scan(args, argv, out) -> int:
    workers = args.workers if args.workers else default_workers()
    records = scan(args.nmax, args.kmax, workers=workers)
    if args.csv and args.csv != "-":
        with open(args.csv, "w", newline="") as fh:
            write_csv(records, fh)
    else:
        write_csv(records, out)
    return EXIT_OK


def build_construction(words: list[str]) -> BinaryMatrix:
    """Matrix from a construction name.

    ``hamming M``: the m x (2^m - 1) Hamming parity-check matrix.
    ``all-dual CODE``: every nonzero dual codeword.
    ``weightW-dual CODE``: dual codewords of weight W.
    ``circulant BITS``: circulant of a 0/1 string.
    ``parity CODE``: reduced parity basis of a named code.
    """
    if not words:
        raise ParseError("missing construction name")
    head, rest = words[0].lower(), words[1:]
    if head == "hamming" and len(rest) == 1:
        try:
            return hamming_parity_check(int(rest[0]))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    if head == "all-dual":
        return all_dual_codewords_matrix(named_code(" ".join(rest)))
    m = re.fullmatch(r"weight(\d+)-dual", head)
    if m:
        return weight_w_dual_matrix(named_code(" ".join(rest)), int(m.group(1)))
    if head == "circulant" and len(rest) == 1 and re.fullmatch(r"[01]+", rest[0]):
        return circulant([int(ch) for ch in rest[0]])
    if head == "parity":
        return named_code(" ".join(rest)).parity_matrix()
    raise ParseError(f"unknown construction {' '.join(words)!r}")


def cmd_construct(args, argv, out) -> int:
    h = build_construction(args.name)
    text = format_matrix(h, args.format)
    if args.out and args.out != "-":
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pwlab", description="Minimum pseudoweights and pseudocodeword redundancy.")
    sub = p.add_subparsers(dest="command", required=True)
    channel_choices = list(CHANNELS) + ["all"]

    s = sub.add_parser("pw", help="minimum pseudoweights of a parity-check matrix")
    s.add_argument("matrix")
    s.add_argument("--channel", choices=channel_choices, default="all")
    s.add_argument("--format", choices=["json", "text"], default="json")
    s.add_argument("--input-format", choices=["auto", "dense", "alist"], default="auto")
    s.add_argument("--guard", type=int, default=16)
    s.set_defaults(func=cmd_pw)

    s = sub.add_parser("redundancy", help="pseudocodeword redundancy of a named code")
    s.add_argument("code", nargs="+", help='e.g. "hamming 3", "golay23"')
    s.add_argument("--channel", choices=channel_choices, default="all")
    s.add_argument("--budget", type=int, default=DEFAULT_MATRIX_BUDGET, help="max candidate matrices")
    s.add_argument("--format", choices=["json", "text"], default="json")
    s.add_argument("--guard", type=int, default=16)
    s.set_defaults(func=cmd_redundancy)

    s = sub.add_parser("bounds", help="closed-form and spectral bounds")
    s.add_argument("code", nargs="*")
    s.add_argument("--matrix")
    s.add_argument("--input-format", choices=["auto", "dense", "alist"], default="auto")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max codewords enumerated")
    s.add_argument("--format", choices=["json", "text"], default="json")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("cyclic-scan", help="eigenvalue bound over all cyclic codes up to a length")
    s.add_argument("--nmax", type=int, default=63)
    s.add_argument("--kmax", type=int, default=DEFAULT_KBUDGET)
    s.add_argument("--csv", help="output path (default stdout)")
    s.add_argument("--workers", type=int, default=0, help="worker processes (default PWLAB_THREADS or CPU count)")
    s.set_defaults(func=cmd_cyclic_scan)

    s = sub.add_parser("construct", help="write a named parity-check matrix")
    s.add_argument("name", nargs="+", help='e.g. "hamming 3", "all-dual hamming 3", "weight3-dual simplex 3"')
    s.add_argument("--out")
    s.add_argument("--format", choices=["alist", "dense"], default="dense")
    s.set_defaults(func=cmd_construct)
    return p


def main(argv=None, out=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, argv, out)
    except (ParseError, ValueError) as exc:
        print(f"pwlab: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BudgetExceeded, DimensionGuard) as exc:
        print(f"pwlab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (AssertionError, PwlabError) as exc:
        print(f"pwlab: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
