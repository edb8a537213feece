"""Jacobi-Trudi type determinants over the exact polynomial ring.

Entry builders take raw integer vectors so that compositions (``lambda - rho``
in the partial-state determinants) are accepted.  The theorem-level functions
(:func:`E_det`, :func:`E_det_finite`, :func:`H_det`, :func:`g_dual_via_phi`)
insist on partitions and raise :class:`NonPartitionInput` otherwise.

Row sets ``C`` are sets of 1-based row indices.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from math import comb
from typing import AbstractSet, Callable, List, Mapping, Sequence, Tuple

from .alphabets import Alphabet, complete, e_pleth, elementary, h_pleth
from .polyring import ONE, ZERO, Polynomial, _mul_terms, t_var, x_var
from .rpp import _check_partial, owt, wt
from .shapes import (
    Cell,
    Flags,
    NonPartitionInput,
    SkewShape,
    effective_bounds,
    is_partition,
    prefix,
    row_support,
)

RingMatrix = List[List[Polynomial]]


class EntryKind(enum.Enum):
    E_PLETHYSTIC = "e"
    E_FINITE = "e-finite"
    H_PLETHYSTIC = "h"


# ---------------------------------------------------------------------------
# determinant


def det(m: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Exact determinant by Laplace expansion memoised over column subsets.

    Rows are consumed top to bottom; ``dp[S]`` is the signed sum over
    injections of the rows seen so far onto the column set ``S``.  Cost is
    O(2^n n) ring multiplications.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return ONE
    dp = {0: ({0: 1}, 0)}
    for i in range(n):
        row = m[i]
        ndp = {}
        for mask, (terms, deg) in dp.items():
            for j in range(n):
                if mask >> j & 1:
                    continue
                a = row[j]
                if not a._terms:
                    continue
                # each used column to the right of j is one inversion
                negative = bin(mask >> (j + 1)).count("1") & 1
                prod, pdeg = _mul_terms(Polynomial._raw(terms, deg), a)
                key = mask | (1 << j)
                slot = ndp.get(key)
                if slot is None:
                    slot = ndp[key] = ({}, 0)
                acc = slot[0]
                for mono, c in prod.items():
                    acc[mono] = acc.get(mono, 0) + (-c if negative else c)
                if pdeg > slot[1]:
                    ndp[key] = (acc, pdeg)
        dp = {}
        for key, (acc, deg) in ndp.items():
            clean = {mono: c for mono, c in acc.items() if c}
            if clean:
                dp[key] = (clean, deg)
        if not dp:
            return ZERO
    terms, deg = dp.get((1 << n) - 1, ({}, 0))
    return Polynomial._raw(terms, deg)


# ---------------------------------------------------------------------------
# entries


def _t_difference(p: int, q: int) -> Tuple[tuple, tuple]:
    """Variables of ``T_p - T_q`` as (plus, minus)."""
    if p >= q:
        return tuple(t_var(i) for i in range(max(q, 0) + 1, p + 1)), ()
    return (), tuple(t_var(i) for i in range(max(p, 0) + 1, q + 1))


@lru_cache(maxsize=None)
def _pleth_entry(kind: str, degree: int, xl: int, xr: int, tp: int, tq: int) -> Polynomial:
    """``e_degree`` or ``h_degree`` of ``X_(xl, xr] + T_tp - T_tq``."""
    if degree < 0:
        return ZERO
    if degree == 0:
        return ONE
    plus, minus = _t_difference(tp, tq)
    xs = tuple(x_var(i) for i in range(xl + 1, xr + 1))
    a = Alphabet(xs + plus, minus)
    return e_pleth(degree, a) if kind == "e" else h_pleth(degree, a)


def _e_entry(lam, mu, alpha, beta, C, i, j) -> Polynomial:
    k = lam[i - 1] - i - mu[j - 1] + j
    if i in C:
        return _pleth_entry("e", k, alpha[j - 1], beta[i - 1] - 1, lam[i - 1], mu[j - 1])
    return _pleth_entry("e", k, alpha[j - 1], beta[i - 1], lam[i - 1] - 1, mu[j - 1])


@lru_cache(maxsize=None)
def _finite_entry(degree: int, xl: int, xr: int, tl: int, tr: int) -> Polynomial:
    """``e_degree(x_{xl+1}, ..., x_{xr}, t_{tl+1}, ..., t_{tr})``."""
    if degree < 0:
        return ZERO
    if degree == 0:
        return ONE
    xs = tuple(x_var(v) for v in range(xl + 1, xr + 1))
    ts = tuple(t_var(v) for v in range(tl + 1, tr + 1))
    return elementary(degree, xs + ts)


def _e_finite_entry(lam, mu, alpha, beta, i, j) -> Polynomial:
    k = lam[i - 1] - mu[j - 1] - i + j
    return _finite_entry(k, alpha[j - 1], beta[i - 1], mu[j - 1], lam[i - 1] - 1)


def _h_entry(lam, mu, alpha, beta, C, i, j) -> Polynomial:
    if i in C and not alpha[j - 1] < beta[i - 1]:
        return ZERO
    k = lam[i - 1] - i - mu[j - 1] + j
    return _pleth_entry("h", k, alpha[j - 1], beta[i - 1], i - 1, j - 1)


def e_entry(shape: SkewShape, flags: Flags, C: AbstractSet[int], i: int, j: int) -> Polynomial:
    """(i, j) entry of the plethystic e-matrix; the barred form for rows in ``C``."""
    return _e_entry(shape.outer, shape.inner, flags.alpha, flags.beta, frozenset(C), i, j)


def e_entry_finite(shape: SkewShape, flags: Flags, i: int, j: int) -> Polynomial:
    return _e_finite_entry(shape.outer, shape.inner, flags.alpha, flags.beta, i, j)


def h_entry(shape: SkewShape, flags: Flags, C: AbstractSet[int], i: int, j: int) -> Polynomial:
    """(i, j) entry of the plethystic h-matrix; rows in ``C`` get the alpha_j < beta_i indicator."""
    return _h_entry(shape.outer, shape.inner, flags.alpha, flags.beta, frozenset(C), i, j)


def _matrix(entry: Callable[[int, int], Polynomial], n: int) -> RingMatrix:
    return [[entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]


def e_matrix(lam, mu, alpha, beta, C: AbstractSet[int] = frozenset()) -> RingMatrix:
    C = frozenset(C)
    return _matrix(lambda i, j: _e_entry(lam, mu, alpha, beta, C, i, j), len(lam))


def e_finite_matrix(lam, mu, alpha, beta) -> RingMatrix:
    return _matrix(lambda i, j: _e_finite_entry(lam, mu, alpha, beta, i, j), len(lam))


def h_matrix(lam, mu, alpha, beta, C: AbstractSet[int] = frozenset()) -> RingMatrix:
    C = frozenset(C)
    return _matrix(lambda i, j: _h_entry(lam, mu, alpha, beta, C, i, j), len(lam))


def build_matrix(kind: EntryKind, shape: SkewShape, flags: Flags, C: AbstractSet[int] = frozenset()) -> RingMatrix:
    lam, mu, a, b = shape.outer, shape.inner, flags.alpha, flags.beta
    if kind is EntryKind.E_PLETHYSTIC:
        return e_matrix(lam, mu, a, b, C)
    if kind is EntryKind.E_FINITE:
        return e_finite_matrix(lam, mu, a, b)
    return h_matrix(lam, mu, a, b, C)


# ---------------------------------------------------------------------------
# theorem-level determinants


def _require_partitions(shape: SkewShape, flags: Flags) -> None:
    if not (is_partition(shape.outer) and is_partition(shape.inner)):
        raise NonPartitionInput(f"{shape} is not a pair of partitions")
    if shape.n != flags.n:
        raise ValueError(f"shape has {shape.n} rows but flags have length {flags.n}")


def E_general(lam, mu, alpha, beta, C: AbstractSet[int] = frozenset()) -> Polynomial:
    """det of the e-matrix for arbitrary nonnegative vectors (compositions allowed)."""
    return det(e_matrix(lam, mu, alpha, beta, C))


def H_general(lam, mu, alpha, beta, C: AbstractSet[int] = frozenset()) -> Polynomial:
    return det(h_matrix(lam, mu, alpha, beta, C))


def E_det(shape: SkewShape, flags: Flags, C: AbstractSet[int] = frozenset()) -> Polynomial:
    """Plethystic e-determinant.

    Equals the column-flagged generating function of the transposed shape
    when :func:`~rppjt.shapes.flag_condition_col` holds.
    """
    _require_partitions(shape, flags)
    return E_general(shape.outer, shape.inner, flags.alpha, flags.beta, C)


def E_det_finite(shape: SkewShape, flags: Flags) -> Polynomial:
    """e-determinant whose entries use explicit variable lists instead of T-differences."""
    _require_partitions(shape, flags)
    return det(e_finite_matrix(shape.outer, shape.inner, flags.alpha, flags.beta))


def H_det(shape: SkewShape, flags: Flags, C: AbstractSet[int] = frozenset()) -> Polynomial:
    """Plethystic h-determinant; equals the row-flagged generating function under the row condition."""
    _require_partitions(shape, flags)
    return H_general(shape.outer, shape.inner, flags.alpha, flags.beta, C)


# ---------------------------------------------------------------------------
# partial-state determinants


def _partial_data(shape: SkewShape, flags: Flags, r0: Mapping[Cell, int]):
    _require_partitions(shape, flags)
    _check_partial(shape, flags, r0)
    rho = prefix(shape, len(r0))
    lengths = rho.row_lengths()
    lam_rest = tuple(l - p for l, p in zip(shape.outer, lengths))
    bounds = effective_bounds(rho, r0, flags.beta)
    return rho, lam_rest, bounds


def EE_partial(shape: SkewShape, flags: Flags, r0: Mapping[Cell, int]) -> Polynomial:
    """owt(R0) times the e-determinant of the unfilled part, rows of R0 barred."""
    rho, lam_rest, bounds = _partial_data(shape, flags, r0)
    C = frozenset(row_support(rho))
    return owt(r0) * E_general(lam_rest, shape.inner, flags.alpha, bounds, C)


def HH_partial(shape: SkewShape, flags: Flags, r0: Mapping[Cell, int]) -> Polynomial:
    """wt(R0) times the fully barred h-determinant of the unfilled part."""
    rho, lam_rest, bounds = _partial_data(shape, flags, r0)
    C = frozenset(range(1, shape.n + 1))
    return wt(r0) * H_general(lam_rest, shape.inner, flags.alpha, bounds, C)


def recurrence_interval(shape: SkewShape, flags: Flags, r0: Mapping[Cell, int]) -> Tuple[Cell, int, int]:
    """Next cell (r, c) after ``r0`` and the admissible range [a, b] for its entry."""
    _, _, bounds = _partial_data(shape, flags, r0)
    cell = prefix(shape, len(r0)).next_cell()
    if cell is None:
        raise ValueError("partial filling already covers the shape")
    r, c = cell
    a = flags.alpha[r - 1] + 1
    if (r - 1, c) in r0 and bounds[r - 2] >= a:
        a = bounds[r - 2]
    return cell, a, bounds[r - 1]


# ---------------------------------------------------------------------------
# t = 1 and t = 0 companions


def gen_binomial(a: int, i: int) -> int:
    """``binom(a, i)`` for any integer ``a`` and ``i >= 0``."""
    if i < 0:
        return 0
    if a >= 0:
        return comb(a, i)
    return (-1) ** i * comb(i - a - 1, i)


def _xs(n_x: int) -> tuple:
    return tuple(x_var(i) for i in range(1, n_x + 1))


def phi_h(k: int, n: int, n_x: int) -> Polynomial:
    """sum_{i=0}^{n} binom(k+i-1, i) h_{n-i}(x_1..x_{n_x})."""
    if n < 0:
        return ZERO
    xs = _xs(n_x)
    acc = ZERO
    for i in range(n + 1):
        b = gen_binomial(k + i - 1, i)
        if b:
            acc = acc + complete(n - i, xs) * b
    return acc


def g_dual_via_phi(shape: SkewShape, n_x: int) -> Polynomial:
    """det(phi^{i-j} h_{lambda_i - mu_j - i + j}) in x_1..x_{n_x}."""
    if not (is_partition(shape.outer) and is_partition(shape.inner)):
        raise NonPartitionInput(f"{shape} is not a pair of partitions")
    lam, mu = shape.outer, shape.inner
    n = shape.n
    m = [[phi_h(i - j, lam[i - 1] - mu[j - 1] - i + j, n_x) for j in range(1, n + 1)] for i in range(1, n + 1)]
    return det(m)


def schur_det_h(shape: SkewShape, n_x: int) -> Polynomial:
    """Classical det(h_{lambda_i - mu_j - i + j}(x_1..x_{n_x}))."""
    lam, mu, xs = shape.outer, shape.inner, _xs(n_x)
    n = shape.n
    return det([[complete(lam[i] - mu[j] - i + j, xs) for j in range(n)] for i in range(n)])


def schur_det_e(shape: SkewShape, n_x: int) -> Polynomial:
    """Classical det(e_{lambda_i - mu_j - i + j}(x_1..x_{n_x})) = s_{lambda'/mu'}."""
    lam, mu, xs = shape.outer, shape.inner, _xs(n_x)
    n = shape.n
    return det([[elementary(lam[i] - mu[j] - i + j, xs) for j in range(n)] for i in range(n)])


def flagged_schur_det_h(shape: SkewShape, flags: Flags) -> Polynomial:
    """det(h_{lambda_i - mu_j - i + j}(x_{alpha_j+1}, ..., x_{beta_i}))."""
    lam, mu, a, b = shape.outer, shape.inner, flags.alpha, flags.beta
    n = shape.n
    return det(
        [
            [complete(lam[i] - mu[j] - i + j, tuple(x_var(v) for v in range(a[j] + 1, b[i] + 1))) for j in range(n)]
            for i in range(n)
        ]
    )


def flagged_schur_det_e(shape: SkewShape, flags: Flags) -> Polynomial:
    """det(e_{lambda_i - mu_j - i + j}(x_{alpha_j+1}, ..., x_{beta_i}))."""
    lam, mu, a, b = shape.outer, shape.inner, flags.alpha, flags.beta
    n = shape.n
    return det(
        [
            [elementary(lam[i] - mu[j] - i + j, tuple(x_var(v) for v in range(a[j] + 1, b[i] + 1))) for j in range(n)]
            for i in range(n)
        ]
    )


__all__ = [
    "E_det",
    "E_det_finite",
    "E_general",
    "EE_partial",
    "EntryKind",
    "H_det",
    "H_general",
    "HH_partial",
    "RingMatrix",
    "build_matrix",
    "det",
    "e_entry",
    "e_entry_finite",
    "e_finite_matrix",
    "e_matrix",
    "flagged_schur_det_e",
    "flagged_schur_det_h",
    "g_dual_via_phi",
    "gen_binomial",
    "h_entry",
    "h_matrix",
    "phi_h",
    "recurrence_interval",
    "schur_det_e",
    "schur_det_h",
]
