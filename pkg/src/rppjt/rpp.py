"""Reverse plane partitions: weights, flagged enumeration, generating functions.

A filling is a plain ``dict`` from 1-based cells to positive integers.
Enumeration fills the cells of a skew shape in fill order (right to left by
column, top to bottom inside a column), so a partial filling living on a
prefix of that order is exactly a state of the backtracking.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from .polyring import ZERO, Polynomial, _BITS, x_var, t_var
from .shapes import Cell, Flags, PrefixDiagram, SkewShape, _check_lengths, prefix

Filling = Dict[Cell, int]


class InconsistentPartialFilling(ValueError):
    """A partial filling is not an admissible flagged RPP on a prefix of the shape."""


# ---------------------------------------------------------------------------
# weights


def is_rpp(filling: Mapping[Cell, int]) -> bool:
    """Weakly increasing along rows and columns (any diagram)."""
    for (i, j), v in filling.items():
        if v < 1:
            return False
        for (i2, j2), w in filling.items():
            if i <= i2 and j <= j2 and v > w:
                return False
    return True


def wt(filling: Mapping[Cell, int]) -> Polynomial:
    """x_v per column containing v, t_i per equal vertical pair starting in row i."""
    exps: Dict = defaultdict(int)
    for v in {(j, val) for (i, j), val in filling.items()}:
        exps[x_var(v[1])] += 1
    for (i, j), val in filling.items():
        if filling.get((i + 1, j)) == val:
            exps[t_var(i)] += 1
    return Polynomial.monomial(exps)


def owt(filling: Mapping[Cell, int]) -> Polynomial:
    """x_v per row containing v, t_j per equal horizontal pair starting in column j."""
    exps: Dict = defaultdict(int)
    for v in {(i, val) for (i, j), val in filling.items()}:
        exps[x_var(v[1])] += 1
    for (i, j), val in filling.items():
        if filling.get((i, j + 1)) == val:
            exps[t_var(j)] += 1
    return Polynomial.monomial(exps)


def transpose_filling(filling: Mapping[Cell, int]) -> Filling:
    return {(j, i): v for (i, j), v in filling.items()}


# ---------------------------------------------------------------------------
# text form


def format_rpp(filling: Mapping[Cell, int], shape: SkewShape) -> str:
    """Rows top to bottom, ``.`` for cells of the inner shape."""
    lines = []
    for r in range(1, shape.n + 1):
        row = ["."] * shape.inner[r - 1]
        row += [str(filling[(r, c)]) for c in range(shape.inner[r - 1] + 1, shape.outer[r - 1] + 1)]
        lines.append(" ".join(row))
    while lines and not lines[-1]:
        lines.pop()
    return "\n".join(lines)


def parse_rpp(text: str) -> Tuple[Filling, SkewShape]:
    filling: Filling = {}
    outer, inner = [], []
    for r, line in enumerate(text.strip("\n").splitlines(), start=1):
        tokens = line.split()
        dots = 0
        for c, tok in enumerate(tokens, start=1):
            if tok == ".":
                if c != dots + 1:
                    raise ValueError(f"row {r}: '.' after an entry")
                dots += 1
            else:
                filling[(r, c)] = int(tok)
        outer.append(len(tokens))
        inner.append(dots)
    return filling, SkewShape(tuple(outer), tuple(inner))


# ---------------------------------------------------------------------------
# enumeration


def _check_partial(shape: SkewShape, flags: Flags, r0: Mapping[Cell, int]) -> PrefixDiagram:
    if not shape.is_valid:
        if r0:
            raise InconsistentPartialFilling("nonempty partial filling on an invalid shape")
        return None  # type: ignore[return-value]
    rho = prefix(shape, len(r0)) if len(r0) <= shape.size() else None
    if rho is None or set(r0) != rho.cells:
        raise InconsistentPartialFilling("partial filling does not cover a prefix of the fill order")
    for (r, c), v in r0.items():
        if not flags.alpha[r - 1] < v <= flags.beta[r - 1]:
            raise InconsistentPartialFilling(f"entry {v} at {(r, c)} violates the row flags")
    if not is_rpp(r0):
        raise InconsistentPartialFilling("partial filling is not weakly increasing")
    return rho


def enumerate_row_flagged(shape: SkewShape, flags: Flags, r0: Optional[Mapping[Cell, int]] = None) -> Iterator[Filling]:
    """Yield every RPP of ``shape`` with alpha_i < R(i, j) <= beta_i that extends ``r0``.

    Output order is lexicographic in the entries listed in fill order.
    """
    _check_lengths(shape, flags)
    r0 = dict(r0 or {})
    _check_partial(shape, flags, r0)
    if not shape.is_valid:
        return
    cells = shape.cells
    alpha, beta = flags.alpha, flags.beta
    vals = dict(r0)

    def rec(k: int):
        if k == len(cells):
            yield dict(vals)
            return
        r, c = cells[k]
        hi = vals.get((r, c + 1), beta[r - 1])
        lo = max(alpha[r - 1] + 1, vals.get((r - 1, c), 0))
        for v in range(lo, hi + 1):
            vals[(r, c)] = v
            yield from rec(k + 1)
        vals.pop((r, c), None)

    yield from rec(len(r0))


def _weighted_sum(shape: SkewShape, flags: Flags, r0: Mapping[Cell, int], transposed: bool) -> Polynomial:
    """Sum of wt (or owt) over flagged RPPs extending ``r0``.

    The weight is accumulated cell by cell: a new entry v at (r, c) contributes
    a t-variable if it repeats its upper (resp. right) neighbour and x_v
    otherwise.
    """
    _check_lengths(shape, flags)
    r0 = dict(r0)
    _check_partial(shape, flags, r0)
    if not shape.is_valid:
        return ZERO
    base = owt(r0) if transposed else wt(r0)
    (base_mono, _), = base._terms.items()
    cells = shape.cells
    alpha, beta = flags.alpha, flags.beta
    ncells = len(cells)

    # precomputed per-cell data: (row, col, right cell, upper cell, monomial for a repeat)
    plan = []
    for r, c in cells:
        right = (r, c + 1) if (r, c + 1) in shape else None
        up = (r - 1, c) if (r - 1, c) in shape else None
        if transposed:
            rep_mono = 1 << (_BITS * (2 * c - 1))  # t_c
            rep_cell = right
        else:
            rep_mono = 1 << (_BITS * (2 * (r - 1) - 1)) if r > 1 else 0  # t_{r-1}
            rep_cell = up
        plan.append((r, c, right, up, rep_cell, rep_mono))

    acc: Dict[int, int] = defaultdict(int)
    vals = dict(r0)

    def rec(k: int, mono: int):
        if k == ncells:
            acc[mono] += 1
            return
        r, c, right, up, rep_cell, rep_mono = plan[k]
        hi = vals[right] if right is not None else beta[r - 1]
        lo = alpha[r - 1] + 1
        if up is not None and vals[up] > lo:
            lo = vals[up]
        rep = vals[rep_cell] if rep_cell is not None else None
        for v in range(lo, hi + 1):
            vals[(r, c)] = v
            step = rep_mono if v == rep else 1 << (_BITS * 2 * (v - 1))
            rec(k + 1, mono + step)
        vals.pop((r, c), None)

    rec(len(r0), base_mono)
    return Polynomial._raw(dict(acc), ncells)


def r_partial(shape: SkewShape, flags: Flags, r0: Mapping[Cell, int]) -> Polynomial:
    """Sum of wt(R) over row-flagged RPPs R of ``shape`` restricting to ``r0``."""
    return _weighted_sum(shape, flags, r0, transposed=False)


def r_bar_partial(shape: SkewShape, flags: Flags, r0: Mapping[Cell, int]) -> Polynomial:
    """Sum of owt(R) over row-flagged RPPs R of ``shape`` restricting to ``r0``."""
    return _weighted_sum(shape, flags, r0, transposed=True)


def g_row_flagged(shape: SkewShape, flags: Flags) -> Polynomial:
    return r_partial(shape, flags, {})


def g_col_flagged(shape: SkewShape, flags: Flags) -> Polynomial:
    """Column-flagged generating function of ``shape``; column j has bounds flags[j].

    Computed through the transposed shape: the sum of owt over row-flagged
    RPPs of the transpose, which equals the sum of wt over the column-flagged
    RPPs of ``shape``.
    """
    n = flags.n
    if not shape.is_valid:
        return ZERO
    ncols = max(shape.outer, default=0)
    if ncols > n:
        raise ValueError(f"shape has {ncols} columns but only {n} column flags")
    return r_bar_partial(shape.transpose(n), flags, {})


def g_unflagged_truncated(shape: SkewShape, n_x: int) -> Polynomial:
    """Refined dual stable Grothendieck polynomial in x_1..x_{n_x} (t unrestricted)."""
    if n_x < 0:
        raise ValueError("n_x must be nonnegative")
    return g_row_flagged(shape, Flags.constant(shape.n, n_x))


def rpp_count(shape: SkewShape, flags: Flags) -> int:
    return sum(1 for _ in enumerate_row_flagged(shape, flags))


def reachable_partials(shape: SkewShape, flags: Flags, limit: Optional[int] = None) -> Iterator[Filling]:
    """Every admissible partial filling on every prefix, shortest first.

    A partial filling is admissible when it is a flagged RPP of its prefix;
    it need not extend to a full RPP.
    """
    _check_lengths(shape, flags)
    if not shape.is_valid:
        return
    cells = shape.cells
    level: List[Filling] = [{}]
    produced = 0
    for k in range(len(cells) + 1):
        for f in level:
            yield f
            produced += 1
            if limit is not None and produced >= limit:
                return
        if k == len(cells):
            break
        r, c = cells[k]
        nxt = []
        for f in level:
            hi = f.get((r, c + 1), flags.beta[r - 1])
            lo = max(flags.alpha[r - 1] + 1, f.get((r - 1, c), 0))
            for v in range(lo, hi + 1):
                g = dict(f)
                g[(r, c)] = v
                nxt.append(g)
        level = nxt


__all__ = [
    "Filling",
    "InconsistentPartialFilling",
    "enumerate_row_flagged",
    "format_rpp",
    "g_col_flagged",
    "g_row_flagged",
    "g_unflagged_truncated",
    "is_rpp",
    "owt",
    "parse_rpp",
    "r_bar_partial",
    "r_partial",
    "reachable_partials",
    "rpp_count",
    "transpose_filling",
    "wt",
]
