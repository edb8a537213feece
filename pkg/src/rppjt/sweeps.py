"""Exhaustive and seeded differential sweeps: determinant side vs enumeration side."""

from __future__ import annotations

import itertools
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from .jacobi_trudi import (
    E_det,
    E_det_finite,
    EE_partial,
    H_det,
    HH_partial,
    g_dual_via_phi,
    recurrence_interval,
    schur_det_h,
)
from .polyring import Polynomial, canonical_string, polysum, substitute_t
from .rpp import g_col_flagged, g_row_flagged, g_unflagged_truncated, r_bar_partial, r_partial, reachable_partials
from .shapes import (
    Flags,
    SkewShape,
    flag_condition_col,
    flag_condition_row,
    is_qpar,
    is_rpar,
    partitions_in_box,
    partitions_of,
)

MODES = ("col", "row", "equiv", "t0", "t1", "partial")


@dataclass
class Mismatch:
    request: str
    lhs: str
    rhs: str


@dataclass
class VerifyReport:
    mode: str
    cases_run: int = 0
    mismatches: List[Mismatch] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        return f"mode={self.mode} cases={self.cases_run} mismatches={len(self.mismatches)} elapsed={self.elapsed:.2f}s"


# ---------------------------------------------------------------------------
# case generators; each case is a hashable tuple so sharding is deterministic


def shape_pairs(n: int, max_part: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """All (lambda, mu) in Par_n x Par_n with parts <= max_part, contained or not."""
    parts = list(partitions_in_box(n, max_part))
    for lam in parts:
        for mu in parts:
            yield lam, mu


def flag_vectors(n: int, max_flag: int) -> List[Tuple[int, ...]]:
    return list(itertools.product(range(max_flag + 1), repeat=n))


def small_shapes(max_size: int, min_len: int = 1) -> Iterator[SkewShape]:
    """Skew shapes lambda/mu with |lambda| <= max_size (lambda nonempty), all mu contained in lambda."""
    for size in range(1, max_size + 1):
        for lam in partitions_of(size):
            n = max(len(lam), min_len)
            for mu in partitions_in_box(n, lam[0]):
                shape = SkewShape(lam, mu)
                if shape.is_valid:
                    yield shape


def _check_flagged_shape(mode: str, lam, mu, max_flag: int) -> Tuple[int, List[Mismatch]]:
    shape = SkewShape(lam, mu)
    n = shape.n
    cols = shape.transpose() if mode == "col" else None
    vecs = flag_vectors(n, max_flag)
    cases = 0
    bad: List[Mismatch] = []
    for alpha in vecs:
        for beta in vecs:
            flags = Flags(alpha, beta)
            if mode == "col":
                if not flag_condition_col(shape, flags):
                    continue
                lhs, rhs = E_det(shape, flags), g_col_flagged(cols, flags)
            elif mode == "row":
                if not flag_condition_row(shape, flags):
                    continue
                lhs, rhs = H_det(shape, flags), g_row_flagged(shape, flags)
            else:
                lhs, rhs = E_det_finite(shape, flags), E_det(shape, flags)
            cases += 1
            if lhs != rhs:
                bad.append(Mismatch(_describe(shape, flags), canonical_string(lhs), canonical_string(rhs)))
    return cases, bad


def _describe(shape: SkewShape, flags: Optional[Flags] = None, extra: str = "") -> str:
    out = f"lambda={shape.outer} mu={shape.inner}"
    if flags is not None:
        out += f" alpha={flags.alpha} beta={flags.beta}"
    return out + extra


def _check_t0(shape: SkewShape, n_x: int) -> Tuple[int, List[Mismatch]]:
    lhs = substitute_t(g_unflagged_truncated(shape, n_x), default=0)
    rhs = schur_det_h(shape, n_x)
    return 1, [] if lhs == rhs else [Mismatch(_describe(shape, extra=f" N={n_x}"), canonical_string(lhs), canonical_string(rhs))]


def _check_t1(shape: SkewShape, n_x: int) -> Tuple[int, List[Mismatch]]:
    lhs = substitute_t(g_unflagged_truncated(shape, n_x), default=1)
    rhs = g_dual_via_phi(shape, n_x)
    return 1, [] if lhs == rhs else [Mismatch(_describe(shape, extra=f" N={n_x}"), canonical_string(lhs), canonical_string(rhs))]


# ---------------------------------------------------------------------------
# partial-state recurrences


def random_recurrence_instance(rng: random.Random, max_len: int, max_part: int, max_flag: int, side: str) -> Tuple[SkewShape, Flags]:
    """Shape with mu < lambda in every row and flags alpha < beta, in QPar (e side) or RPar (h side)."""
    n = rng.randint(1, max_len)
    while True:
        lam = tuple(sorted((rng.randint(1, max_part) for _ in range(n)), reverse=True))
        mu = tuple(sorted((rng.randint(0, p - 1) for p in lam), reverse=True))
        if all(m < l for m, l in zip(mu, lam)):
            break
    check = is_qpar if side == "e" else is_rpar
    while True:
        alpha = tuple(rng.randint(0, max_flag - 1) for _ in range(n))
        beta = tuple(rng.randint(a + 1, max_flag) for a in alpha)
        if side == "h":
            alpha, beta = tuple(sorted(alpha)), tuple(sorted(beta))
        if check(alpha) and check(beta) and all(a < b for a, b in zip(alpha, beta)):
            return SkewShape(lam, mu), Flags(alpha, beta)


def check_recurrences(shape: SkewShape, flags: Flags, side: str, limit: Optional[int] = None) -> Tuple[int, List[Mismatch]]:
    """Recurrence and partial-sum equality at every reachable partial state."""
    partial = EE_partial if side == "e" else HH_partial
    brute = r_bar_partial if side == "e" else r_partial
    cases = 0
    bad: List[Mismatch] = []
    ncells = shape.size()
    for r0 in reachable_partials(shape, flags, limit=limit):
        cases += 1
        lhs = partial(shape, flags, r0)
        tag = f" side={side} R0={sorted(r0.items())}"
        direct = brute(shape, flags, r0)
        if lhs != direct:
            bad.append(Mismatch(_describe(shape, flags, tag + " [partial sum]"), canonical_string(lhs), canonical_string(direct)))
        if len(r0) == ncells:
            continue
        (r, c), a, b = recurrence_interval(shape, flags, r0)
        branches = []
        for k in range(a, b + 1):
            child = dict(r0)
            child[(r, c)] = k
            branches.append(partial(shape, flags, child))
        rhs = polysum(branches)
        if lhs != rhs:
            bad.append(Mismatch(_describe(shape, flags, tag + " [recurrence]"), canonical_string(lhs), canonical_string(rhs)))
    return cases, bad


# ---------------------------------------------------------------------------
# driver


def _jobs(mode: str, max_part: int, max_len: int, max_flag: int, seed: Optional[int]) -> List[tuple]:
    if mode in ("col", "row", "equiv"):
        return [
            (mode, lam, mu, max_flag)
            for n in range(1, max_len + 1)
            for lam, mu in shape_pairs(n, max_part)
        ]
    if mode in ("t0", "t1"):
        # shapes in the max_len x max_part box, alphabet x_1..x_{max_flag}
        return [(mode, lam, mu, max_flag) for lam, mu in shape_pairs(max_len, max_part)]
    if mode == "partial":
        rng = random.Random(seed)
        jobs = []
        for idx in range(_PARTIAL_INSTANCES):
            side = "e" if idx % 2 == 0 else "h"
            shape, flags = random_recurrence_instance(rng, max_len, max_part, max_flag, side)
            jobs.append((mode, shape.outer, shape.inner, flags.alpha, flags.beta, side))
        return jobs
    raise ValueError(f"unknown mode {mode!r}")


_PARTIAL_INSTANCES = 200


def run_job(job: tuple) -> Tuple[int, List[Mismatch]]:
    mode = job[0]
    if mode in ("col", "row", "equiv"):
        return _check_flagged_shape(mode, job[1], job[2], job[3])
    if mode == "t0":
        return _check_t0(SkewShape(job[1], job[2]), job[3])
    if mode == "t1":
        return _check_t1(SkewShape(job[1], job[2]), job[3])
    _, lam, mu, alpha, beta, side = job
    return check_recurrences(SkewShape(lam, mu), Flags(alpha, beta), side)


def worker_count() -> int:
    """Parallelism cap from JT_THREADS (default 1)."""
    raw = os.environ.get("JT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def verify(mode: str, max_part: int, max_len: int, max_flag: int, seed: Optional[int] = None, workers: Optional[int] = None) -> VerifyReport:
    """Run one sweep.  Mismatches are reported in job order regardless of sharding."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if min(max_part, max_len, max_flag) < 0:
        raise ValueError("sweep bounds must be nonnegative")
    start = time.perf_counter()
    jobs = _jobs(mode, max_part, max_len, max_flag, seed)
    workers = worker_count() if workers is None else workers
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_job, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        results = [run_job(job) for job in jobs]
    report = VerifyReport(mode)
    for cases, bad in results:
        report.cases_run += cases
        report.mismatches.extend(bad)
    report.elapsed = time.perf_counter() - start
    return report
