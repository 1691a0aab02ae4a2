"""One test per acceptance criterion; each records a PASS/FAIL line for the run summary."""

from __future__ import annotations

import itertools
import random
import time
from fractions import Fraction

import pytest

from conftest import CRITERIA
from oracles import brute_force_rays, min_distance_by_support, min_stopping_set_oracle
from pwlab.bounds import (
    awgnc_upper_bound,
    bound_gap_report,
    bsc_upper_bound,
    design_lower_bound,
    detect_design,
    eigenvalue_bound,
)
from pwlab.cone import ConeSystem, cone_contains, extreme_rays, fundamental_cone, is_extreme, sample_cone_point
from pwlab.constructions import (
    all_dual_codewords_matrix,
    golay23,
    golay24,
    hamming_code,
    named_code,
    simplex_code,
    weight_w_dual_matrix,
)
from pwlab.cyclic import scan
from pwlab.gf2core import BinaryMatrix, LinearCode, dual_code, is_parity_check_for, kernel_code, min_distance, permute_bits
from pwlab.search import (
    automorphism_group,
    candidate_matrices,
    canonical_row_set,
    count_distinct_optimal_matrices,
    exhaustive_matrix_property,
    min_at_least,
    pseudoredundancy,
)
from pwlab.weights import AWGNC, BEC, BSC, CHANNELS, INF, MAXFRAC, min_pseudoweights, pseudoweight

OPTIMAL_SIMPLEX_H = BinaryMatrix.from_lists(
    [[int(c) for c in r] for r in ("1101000", "0110100", "0011010", "0001101")]
)


def record(number: int, ok: bool, detail: str, started: float) -> None:
    CRITERIA.append(f"criterion {number}: {'PASS' if ok else 'FAIL'} ({time.time() - started:.1f}s) {detail}")
    print(CRITERIA[-1])
    assert ok, detail


def test_criterion_1_small_code_redundancies():
    t0 = time.time()
    expected = {
        "hamming 3": (3, 4, 7),
        "simplex 3": (4, 5, 7),
        "extended_hamming 3": (5, 6, INF),
    }
    got = {}
    for name in expected:
        code = named_code(name)
        got[name] = tuple(pseudoredundancy(code, ch).rho for ch in (AWGNC, BSC, MAXFRAC))
    ok = got == expected and time.time() - t0 <= 600
    record(1, ok, f"rho (awgnc, bsc, maxfrac) = {got}", t0)


def same_up_to_permutation(a: BinaryMatrix, b: BinaryMatrix) -> bool:
    target = set(b.rows)
    if a.n_rows != b.n_rows or a.n_cols != b.n_cols:
        return False
    return any({permute_bits(r, p) for r in a.rows} == target for p in itertools.permutations(range(a.n_cols)))


def test_criterion_2_unique_optimal_simplex_matrix():
    t0 = time.time()
    code = simplex_code(3)
    res = count_distinct_optimal_matrices(code, 4, AWGNC, 4)
    rep = res.representatives[0] if res.representatives else None
    matches = rep is not None and same_up_to_permutation(rep, OPTIMAL_SIMPLEX_H)
    group = automorphism_group(code)
    weight3 = {
        canonical_row_set(h.rows, 7, group)
        for h in candidate_matrices(code, 4)
        if set(h.row_weights()) == {3}
    }
    only_weight3 = rep is not None and weight3 == {canonical_row_set(rep.rows, 7, group)}
    ok = res.count == 1 and matches and only_weight3
    record(2, ok, f"classes={res.count}, equals reference={matches}, constant-weight-3 classes={len(weight3)}", t0)


def test_criterion_3_awgnc_at_least_three():
    t0 = time.time()
    details, ok = [], True
    for name in ("hamming 3", "shortened_hamming 3"):
        code = named_code(name)
        assert (code.n, code.k, min_distance(LinearCode.from_generator(code.generator_basis, code.n))) in {(7, 4, 3), (6, 3, 3)}
        aw = exhaustive_matrix_property(code, min_at_least(AWGNC, 3))
        bs = exhaustive_matrix_property(code, min_at_least(BSC, 3))
        cex = bs.counterexample
        cex_ok = (
            cex is not None
            and is_parity_check_for(cex, code)
            and min_pseudoweights(cex, BSC)[BSC] < 3
        )
        ok &= aw.holds and not bs.holds and cex_ok
        details.append(f"{name}: awgnc holds on {aw.matrices_examined} matrices, bsc counterexample {cex and cex.rows}")
    ok &= time.time() - t0 <= 1800
    record(3, ok, "; ".join(details), t0)


def k2_corpus(n_max: int = 8) -> list[LinearCode]:
    """Every [n,2] code without an all-zero coordinate, up to equivalence, for 3 <= n <= n_max.

    Such a code is fixed by how many coordinates carry each nonzero column
    type (1,0), (0,1), (1,1); permuting the types gives equivalent codes.
    """
    codes = []
    for n in range(3, n_max + 1):
        for a in range(n + 1):
            for b in range(1, a + 1):
                c = n - a - b
                if c < 0 or c > b:
                    continue
                g1 = (1 << a) - 1 | (((1 << c) - 1) << (a + b))
                g2 = ((1 << b) - 1) << a | (((1 << c) - 1) << (a + b))
                codes.append(LinearCode.from_generator([g1, g2], n))
    return codes


def test_criterion_4_k2_rule():
    t0 = time.time()
    corpus = k2_corpus()
    bad = []
    for code in corpus:
        assert code.k == 2
        for ch in (AWGNC, BSC, MAXFRAC):
            rho = pseudoredundancy(code, ch).rho
            if rho != code.n - 2:
                bad.append((code.n, code.generator_basis, ch, rho))
    record(4, not bad, f"{len(corpus)} codes with k=2, 3 <= n <= 8; mismatches: {bad}", t0)


def test_criterion_5_table_slice():
    t0 = time.time()
    records = scan(31)
    want = {(n, 1, n) for n in range(3, 32)}
    want |= {(7, 4, 3), (15, 11, 3), (31, 26, 3), (7, 3, 4), (15, 7, 5), (21, 11, 6)}
    flagged = [r for r in records if r.meets_bound]
    got = {(r.n, r.k, r.d) for r in flagged}
    close = all(r.d >= 3 and abs(r.bound - r.d) <= 1e-6 for r in flagged)
    ok = got == want and close and time.time() - t0 <= 1200
    record(5, ok, f"{len(records)} records, {len(flagged)} flagged; extra={sorted(got - want)}, missing={sorted(want - got)}", t0)


def test_criterion_6_design_bounds():
    t0 = time.time()
    problems = []
    for m in (2, 3, 4):
        n = (1 << m) - 1
        h = all_dual_codewords_matrix(hamming_code(m))
        p = detect_design(h)
        if p is None or p.kind != "bibd" or (p.n, p.w_r, p.lam) != (n, 1 << (m - 1), 1 << (m - 2)):
            problems.append(f"all-dual hamming {m}: {p}")
        elif design_lower_bound(p) != 3:
            problems.append(f"all-dual hamming {m}: lower bound {design_lower_bound(p)}")
        else:
            ev = eigenvalue_bound(h).bound
            if abs(ev - float(1 + Fraction(p.w_c, p.lam))) > 1e-6:
                problems.append(f"all-dual hamming {m}: eigenvalue bound {ev}")

        h = weight_w_dual_matrix(simplex_code(m), 3)
        p = detect_design(h)
        if not is_parity_check_for(h, simplex_code(m)):
            problems.append(f"weight-3 simplex {m}: not a parity-check matrix")
        if p is None or p.kind != "bibd" or (p.n, p.w_r, p.lam) != (n, 3, 1):
            problems.append(f"weight-3 simplex {m}: {p}")
        elif design_lower_bound(p) != 1 << (m - 1):
            problems.append(f"weight-3 simplex {m}: lower bound {design_lower_bound(p)}")
        else:
            ev = eigenvalue_bound(h).bound
            if abs(ev - float(1 + Fraction(p.w_c, p.lam))) > 1e-6:
                problems.append(f"weight-3 simplex {m}: eigenvalue bound {ev}")
    record(6, not problems, f"m = 2..4; problems: {problems}", t0)


def test_criterion_7_golay():
    t0 = time.time()
    g23 = golay23()
    fresh = LinearCode.from_generator(g23.generator_basis, 23)
    d_code, d_dual = min_distance(fresh), min_distance(dual_code(fresh))
    ub = bsc_upper_bound(23, d_dual)[0]
    r23, r24 = bound_gap_report(g23), bound_gap_report(golay24())
    ok = (
        (d_code, d_dual, ub) == (7, 8, 6)
        and r23.rho_bsc_infinite and r24.rho_bsc_infinite
        and (r23.bsc_ub, r23.d_code, r24.bsc_ub, r24.d_code) == (6, 7, 6, 8)
    )
    record(7, ok, f"D={d_code}, dual d={d_dual}, bsc ub={ub}, rho_bsc inf: golay23={r23.rho_bsc_infinite}, golay24={r24.rho_bsc_infinite}", t0)


PROPERTY_TRIALS = 10_000
SAMPLES_PER_TRIAL = 3


def _ordering_ok(mins) -> bool:
    return mins[MAXFRAC] <= mins[AWGNC] <= mins[BEC] and mins[MAXFRAC] <= mins[BSC] <= mins[BEC]


def test_criterion_8_property_suites():
    t0 = time.time()
    rng = random.Random(20240808)
    violations = {key: 0 for key in (
        "ordering", "minima<=D", "scale", "soundness", "extremality", "monotonicity",
        "bec=stopping", "samples", "awgnc<=dual-distance bound", "bsc<=2ceil(n/d)",
    )}
    checked = dict.fromkeys(violations, 0)
    for trial in range(PROPERTY_TRIALS):
        n = rng.randint(2, 9)
        h = BinaryMatrix(n, tuple(rng.getrandbits(n) for _ in range(rng.randint(1, 5))))
        system = fundamental_cone(h)
        rays = extreme_rays(system)
        mins = min_pseudoweights(h, rays=rays).minima

        checked["ordering"] += 1
        violations["ordering"] += not _ordering_ok(mins)

        code = kernel_code(h)
        if code.k:
            big_d = min_distance_by_support(code.generator_basis, n)
            checked["minima<=D"] += 1
            violations["minima<=D"] += any(v > big_d for v in mins.values())

        for ray in rays:
            t = Fraction(rng.randint(1, 50), rng.randint(1, 50))
            scaled = [t * v for v in ray]
            checked["scale"] += 1
            violations["scale"] += any(pseudoweight(ray, ch) != pseudoweight(scaled, ch) for ch in CHANNELS)
            checked["soundness"] += 1
            violations["soundness"] += not cone_contains(system, ray)
            checked["extremality"] += 1
            violations["extremality"] += not is_extreme(system, ray)

        bigger = BinaryMatrix(n, h.rows + (rng.getrandbits(n),))
        mins2 = min_pseudoweights(bigger).minima
        checked["monotonicity"] += 1
        violations["monotonicity"] += any(mins2[ch] < mins[ch] for ch in CHANNELS)

        checked["bec=stopping"] += 1
        violations["bec=stopping"] += mins[BEC] != min_stopping_set_oracle(h.rows, n)

        if rays:
            for s in range(SAMPLES_PER_TRIAL):
                x = sample_cone_point(rays, trial * SAMPLES_PER_TRIAL + s)
                checked["samples"] += 1
                violations["samples"] += not cone_contains(system, x) or any(
                    pseudoweight(x, ch) < mins[ch] for ch in CHANNELS
                )

        if code.k and code.k < n:
            d_dual = min_distance_by_support(code.parity_basis, n)
            top = min_pseudoweights(all_dual_codewords_matrix(code), [AWGNC, BSC]).minima
            checked["awgnc<=dual-distance bound"] += 1
            violations["awgnc<=dual-distance bound"] += top[AWGNC] > awgnc_upper_bound(n, d_dual)[0]
            checked["bsc<=2ceil(n/d)"] += 1
            violations["bsc<=2ceil(n/d)"] += top[BSC] > bsc_upper_bound(n, d_dual)[0]
    total = sum(violations.values())
    summary = ", ".join(f"{k}: {violations[k]}/{checked[k]}" for k in violations)
    record(8, total == 0 and all(checked.values()), f"{PROPERTY_TRIALS} trials; violations/checks {summary}", t0)


def random_system(rng: random.Random) -> ConeSystem:
    n = rng.randint(1, 6)
    ineqs = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    if rng.random() < 0.5:
        h = BinaryMatrix(n, tuple(rng.getrandbits(n) for _ in range(rng.randint(1, 4))))
        return fundamental_cone(h)
    for _ in range(rng.randint(1, 7)):
        ineqs.append(tuple(rng.choice((-1, 0, 0, 1)) for _ in range(n)))
    return ConeSystem(n, tuple(ineqs))


def test_criterion_9_oracle_equivalence():
    t0 = time.time()
    rng = random.Random(909)
    mismatches = []
    nonempty = 0
    for idx in range(200):
        s = random_system(rng)
        got = set(extreme_rays(s))
        want = brute_force_rays(s.inequalities, s.n)
        nonempty += bool(want)
        if got != want:
            mismatches.append((idx, s.n, sorted(got ^ want)))
    record(9, not mismatches, f"200 systems (n <= 6, {nonempty} with rays); mismatches: {mismatches[:3]}", t0)
