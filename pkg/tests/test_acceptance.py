"""Acceptance gate: ten criteria, one PASS/FAIL line each.

Run under pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import itertools
import random
import sys
import time
from typing import Callable, Dict, List, Tuple

import pytest

from rppjt.alphabets import Alphabet, e_pleth, elementary, h_pleth, t_prefix, x_interval
from rppjt.jacobi_trudi import E_general, H_general, det, e_matrix, g_dual_via_phi, h_matrix, schur_det_h
from rppjt.polyring import ONE, ZERO, Polynomial, canonical_string, substitute_t, swap_x, t, t_var, x, x_var
from rppjt.rpp import g_col_flagged, g_row_flagged, g_unflagged_truncated, owt, parse_rpp, wt
from rppjt.shapes import (
    Flags,
    SkewShape,
    flag_condition_col,
    flag_condition_row,
    is_partition,
    is_qpar,
    is_rpar,
    partitions_in_box,
)
from rppjt.sweeps import check_recurrences, random_recurrence_instance, small_shapes, verify

Outcome = Tuple[bool, str]
RESULTS: Dict[int, Tuple[bool, str, float]] = {}

SWEEP_BUDGET = 300.0


def _sweep(mode: str) -> Outcome:
    report = verify(mode, max_part=3, max_len=3, max_flag=3, workers=1)
    detail = f"{report.cases_run} cases, {len(report.mismatches)} mismatches, {report.elapsed:.1f}s"
    if report.mismatches:
        m = report.mismatches[0]
        detail += f"; first: {m.request}: {m.lhs} != {m.rhs}"
    return report.ok and report.elapsed < SWEEP_BUDGET, detail


def criterion_1() -> Outcome:
    """E-determinant equals the column-flagged generating function under the column condition."""
    return _sweep("col")


def criterion_2() -> Outcome:
    """H-determinant equals the row-flagged generating function under the row condition."""
    return _sweep("row")


def criterion_3() -> Outcome:
    """Finite-alphabet and plethystic e-determinants agree for all flags."""
    return _sweep("equiv")


def criterion_4() -> Outcome:
    """The three counterexample instances."""
    e3 = elementary(3, (x_var(1), x_var(2), t_var(1), t_var(2)))
    cases = [
        ((3, 3), (2, 0), (2, 0), (2, 2), "e", [[ZERO, x(1) * x(2) * t(1) * t(2)], [ONE, e3]]),
        ((2, 2), (1, 0), (1, 0), (1, 1), "h", [[ZERO, x(1) ** 3 - x(1) ** 2 * t(1)], [ONE, x(1) ** 2]]),
        ((1, 1), (0, 1), (0, 0), (1, 1), "h", [[x(1), x(1) - t(1)], [ONE, ONE]]),
    ]
    problems = []
    for idx, (lam, mu, alpha, beta, kind, expected) in enumerate(cases, start=1):
        shape, flags = SkewShape(lam, mu), Flags(alpha, beta)
        if kind == "e":
            matrix = e_matrix(lam, mu, alpha, beta)
            enum = g_col_flagged(shape.transpose(), flags)
            predicate = flag_condition_col(shape, flags)
        else:
            matrix = h_matrix(lam, mu, alpha, beta)
            enum = g_row_flagged(shape, flags)
            # with a non-partition inner shape the failing hypothesis is partition-ness itself
            predicate = flag_condition_row(shape, flags) if is_partition(mu) else False
        value = det(matrix)
        if matrix != expected:
            problems.append(f"#{idx} matrix {[[canonical_string(e) for e in r] for r in matrix]}")
        if value.is_zero() or value != det(expected):
            problems.append(f"#{idx} determinant {canonical_string(value)}")
        if not enum.is_zero():
            problems.append(f"#{idx} enumeration {canonical_string(enum)}")
        if predicate:
            problems.append(f"#{idx} predicate true")
    return not problems, "; ".join(problems) or "3 instances: matrices, determinants -x1*x2*t1*t2, -x1^3 + x1^2*t1, t1; enumeration 0"


def _specialization(max_size: int, n_x: int, check: Callable[[SkewShape], bool]) -> Tuple[int, List[str]]:
    count, bad = 0, []
    for shape in small_shapes(max_size):
        count += 1
        if not check(shape):
            bad.append(str(shape))
    return count, bad


def criterion_5() -> Outcome:
    """t = 0 gives the classical h-determinant."""
    n_x = 4
    count, bad = _specialization(
        6, n_x, lambda s: substitute_t(g_unflagged_truncated(s, n_x), default=0) == schur_det_h(s, n_x)
    )
    return not bad, f"{count} shapes |lambda| <= 6, N = {n_x}, {len(bad)} mismatches {bad[:3]}"


def criterion_6() -> Outcome:
    """t = 1 gives the phi-determinant."""
    n_x = 3
    count, bad = _specialization(
        6, n_x, lambda s: substitute_t(g_unflagged_truncated(s, n_x), default=1) == g_dual_via_phi(s, n_x)
    )
    return not bad, f"{count} shapes |lambda| <= 6, N = {n_x}, {len(bad)} mismatches {bad[:3]}"


def criterion_7() -> Outcome:
    """Symmetry in x under adjacent swaps."""
    n_x = 4

    def symmetric(s: SkewShape) -> bool:
        g = g_unflagged_truncated(s, n_x)
        return all(swap_x(g, i, i + 1) == g for i in range(1, n_x))

    count, bad = _specialization(5, n_x, symmetric)
    return not bad, f"{count} shapes |lambda| <= 5, N = {n_x}, {len(bad)} asymmetric {bad[:3]}"


def criterion_8() -> Outcome:
    """Partial-state recurrences on 200 seeded instances."""
    rng = random.Random(20240518)
    states, bad = 0, []
    for idx in range(200):
        side = "e" if idx % 2 == 0 else "h"
        shape, flags = random_recurrence_instance(rng, max_len=4, max_part=4, max_flag=5, side=side)
        cases, mismatches = check_recurrences(shape, flags, side)
        states += cases
        bad.extend(mismatches)
    detail = f"200 instances, {states} partial states, {len(bad)} failures"
    if bad:
        detail += f"; first: {bad[0].request}"
    return not bad, detail


# ---------------------------------------------------------------------------
# criterion 9: lemma micro-suite


def _vectors(n: int, top: int):
    return itertools.product(range(top + 1), repeat=n)


def _subsets(n: int):
    rows = range(1, n + 1)
    return [frozenset(c) for r in range(n + 1) for c in itertools.combinations(rows, r)]


def _lemma_pleth(rng: random.Random) -> int:
    pool = [x_var(i) for i in range(1, 4)] + [t_var(i) for i in range(1, 4)]
    fails = 0
    for _ in range(150):
        vs = rng.sample(pool, rng.randint(1, 5))
        cut = rng.randint(1, len(vs))
        z_alpha = Alphabet(vs[:cut], vs[cut:])
        z = rng.choice(z_alpha.plus)
        rest = Alphabet([v for v in z_alpha.plus if v != z], z_alpha.minus)
        zp = Polynomial.var(z)
        for k in range(-1, len(z_alpha) + 3):
            fails += e_pleth(k, z_alpha) != e_pleth(k, rest) + zp * e_pleth(k - 1, rest)
            fails += h_pleth(k, z_alpha) != h_pleth(k, rest) + zp * h_pleth(k - 1, z_alpha)
    for i in range(0, 7):
        for j in range(0, i + 1):
            for k in range(i - j + 1, i - j + 4):
                fails += not e_pleth(k, t_prefix(i) - t_prefix(j)).is_zero()
    for i in range(1, 7):
        for j in range(i, 8):
            for k in range(j - i + 1, j - i + 4):
                fails += not h_pleth(k, t_prefix(i - 1) - t_prefix(j - 1)).is_zero()
    return fails


def _lemma_initial_and_containment() -> int:
    fails = 0
    for n in (1, 2, 3):
        pars = list(partitions_in_box(n, 2))
        flag_pairs = [(a, b) for a in _vectors(n, 2) for b in _vectors(n, 2)]
        for mu in pars:
            for alpha, beta in flag_pairs:
                for C in _subsets(n):
                    fails += E_general(mu, mu, alpha, beta, C) != ONE
                    if all(a < b for a, b in zip(alpha, beta)):
                        fails += H_general(mu, mu, alpha, beta, C) != ONE
        for lam in pars:
            for mu in pars:
                if all(m <= l for m, l in zip(mu, lam)):
                    continue
                for alpha, beta in flag_pairs[:: max(1, len(flag_pairs) // 40)]:
                    for C in _subsets(n):
                        fails += not E_general(lam, mu, alpha, beta, C).is_zero()
                        fails += not H_general(lam, mu, alpha, beta, C).is_zero()
    return fails


def _lemma_vanishing() -> int:
    """E = 0 (QPar flags) and H(C) = 0 (RPar flags) when some nonempty row has alpha_k >= beta_k."""
    fails = 0
    for n in (1, 2, 3):
        pars = list(partitions_in_box(n, 2))
        vecs = list(_vectors(n, 3))
        for lam in pars:
            for mu in pars:
                for alpha in vecs:
                    for beta in vecs:
                        if not any(alpha[k] >= beta[k] and mu[k] < lam[k] for k in range(n)):
                            continue
                        if is_qpar(alpha) and is_qpar(beta):
                            fails += not E_general(lam, mu, alpha, beta).is_zero()
                        if is_rpar(alpha) and is_rpar(beta):
                            for C in _subsets(n):
                                fails += not H_general(lam, mu, alpha, beta, C).is_zero()
    return fails


def _lemma_equal_rows(rng: random.Random) -> int:
    fails = checked = 0
    while checked < 400:
        n = rng.randint(2, 3)
        lam = [rng.randint(0, 3) for _ in range(n)]
        beta = [rng.randint(0, 4) for _ in range(n)]
        alpha = tuple(rng.randint(0, 3) for _ in range(n))
        mu = tuple(rng.randint(0, 3) for _ in range(n))
        r = rng.randint(2, n)
        lam[r - 1] = lam[r - 2] + 1
        beta[r - 1] = beta[r - 2] - 1
        if beta[r - 1] < 0:
            continue
        C = {r - 1} | {i for i in range(1, n + 1) if i not in (r - 1, r) and rng.random() < 0.5}
        fails += not E_general(tuple(lam), mu, alpha, tuple(beta), C).is_zero()
        checked += 1
    return fails


def _lemma_bar_removal(rng: random.Random) -> int:
    fails = checked = 0
    while checked < 400:
        n = rng.randint(1, 3)
        alpha = tuple(sorted(rng.randint(0, 3) for _ in range(n)))
        beta = tuple(rng.randint(0, 4) for _ in range(n))
        mu = tuple(sorted((rng.randint(0, 2) for _ in range(n)), reverse=True))
        lam = tuple(rng.randint(0, 4) for _ in range(n))
        ks = [k for k in range(1, n + 1) if alpha[k - 1] < beta[k - 1] and mu[k - 1] < lam[k - 1]]
        if not ks:
            continue
        k = rng.choice(ks)
        C = {k} | {i for i in range(1, n + 1) if rng.random() < 0.5}
        fails += H_general(lam, mu, alpha, beta, C) != H_general(lam, mu, alpha, beta, C - {k})
        # every row admissible: all bars can go
        if all(a < b for a, b in zip(alpha, beta)) and all(m < l for m, l in zip(mu, lam)) and is_partition(lam):
            fails += H_general(lam, mu, alpha, beta, C) != H_general(lam, mu, alpha, beta)
        checked += 1
    return fails


def criterion_9() -> Outcome:
    """Lemma micro-suite."""
    rng = random.Random(9)
    parts = {
        "plethysm": _lemma_pleth(rng),
        "initial/containment": _lemma_initial_and_containment(),
        "vanishing": _lemma_vanishing(),
        "equal rows": _lemma_equal_rows(rng),
        "bar removal": _lemma_bar_removal(rng),
    }
    total = sum(parts.values())
    return total == 0, ", ".join(f"{k}: {v} failures" for k, v in parts.items())


SAMPLE_RPP = """\
. . . 2 2 3
. 1 1 2 3
1 1 2 2 3
1 2 3
2 2 3
"""


def criterion_10() -> Outcome:
    """Column and row shapes, and the sample RPP weights."""
    n_x = 4
    xs = tuple(x_var(i) for i in range(1, n_x + 1))
    problems = []
    for k in range(0, 5):
        column = SkewShape((1,) * k) if k else SkewShape((0,))
        ts = tuple(t_var(i) for i in range(1, k))
        if g_unflagged_truncated(column, n_x) != elementary(k, xs + ts):
            problems.append(f"(1^{k})")
        if e_pleth(k, x_interval(0, n_x) + t_prefix(k - 1)) != elementary(k, xs + ts):
            problems.append(f"e_{k} plethystic")
        row = SkewShape((k,))
        if g_unflagged_truncated(row, n_x) != h_pleth(k, x_interval(0, n_x)):
            problems.append(f"({k})")
    filling, shape = parse_rpp(SAMPLE_RPP)
    if canonical_string(wt(filling)) != "x1^3*x2^5*x3^3*t1*t2^3*t3*t4^2":
        problems.append("wt(Fig. 2)")
    if canonical_string(owt(filling)) != "x1^3*x2^5*x3^5*t1^2*t2*t3*t4":
        problems.append("owt(Fig. 2)")
    return not problems, ", ".join(problems) or "columns k <= 4, rows k <= 4 at N = 4; both sample RPP monomials exact"


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 11)}


def run_criterion(i: int) -> Tuple[bool, str, float]:
    start = time.perf_counter()
    try:
        ok, detail = CRITERIA[i]()
    except Exception as exc:  # a crash is a failure, reported like one
        ok, detail = False, f"error: {exc!r}"
    result = (ok, detail, time.perf_counter() - start)
    RESULTS[i] = result
    return result


def format_line(i: int, result: Tuple[bool, str, float]) -> str:
    ok, detail, elapsed = result
    return f"criterion {i:2d}: {'PASS' if ok else 'FAIL'} ({elapsed:.1f}s) {CRITERIA[i].__doc__} {detail}"


@pytest.mark.parametrize("i", range(1, 11))
def test_criterion(i):
    result = run_criterion(i)
    print(format_line(i, result))
    assert result[0], result[1]


if __name__ == "__main__":
    failed = 0
    for i in CRITERIA:
        res = run_criterion(i)
        failed += not res[0]
        print(format_line(i, res), flush=True)
    sys.exit(1 if failed else 0)
