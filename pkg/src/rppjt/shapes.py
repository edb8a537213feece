"""Partitions, skew shapes, row flags and the right-to-left cell order.

Cells are 1-based ``(row, col)`` pairs in matrix coordinates.  The fill
order visits columns from right to left and each column top to bottom;
ranks in that order are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Set, Tuple

Cell = Tuple[int, int]


class CellNotInShape(ValueError):
    pass


class OutOfRange(ValueError):
    pass


class NonPartitionInput(ValueError):
    """A theorem-level routine received a vector that is not a partition."""


# ---------------------------------------------------------------------------
# partitions


def is_partition(v: Sequence[int]) -> bool:
    return all(p >= 0 for p in v) and all(v[i] >= v[i + 1] for i in range(len(v) - 1))


def pad(v: Sequence[int], n: int) -> Tuple[int, ...]:
    v = tuple(v)
    if len(v) > n:
        if any(v[n:]):
            raise ValueError(f"{v} has nonzero entries beyond length {n}")
        return v[:n]
    return v + (0,) * (n - len(v))


def transpose(p: Sequence[int], length: Optional[int] = None) -> Tuple[int, ...]:
    """Conjugate partition, of length ``p[0]`` unless ``length`` is given."""
    if not is_partition(p):
        raise NonPartitionInput(f"{tuple(p)} is not a partition")
    n = p[0] if p else 0
    conj = tuple(sum(1 for part in p if part > j) for j in range(n))
    if length is None:
        return conj
    return pad(conj, length)


def parse_partition(text: str) -> Tuple[int, ...]:
    """``"8,7,7,5,3"`` -> (8, 7, 7, 5, 3); ``""`` and ``"0"`` give ()."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    parts = tuple(int(s) for s in text.split(","))
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {text!r}")
    return parts


def format_partition(p: Sequence[int]) -> str:
    return ",".join(map(str, p))


def partitions_in_box(n: int, max_part: int) -> Iterator[Tuple[int, ...]]:
    """All partitions of length exactly ``n`` (zeros allowed) with parts <= max_part."""

    def rec(prefix, cap, left):
        if left == 0:
            yield tuple(prefix)
            return
        for v in range(cap, -1, -1):
            prefix.append(v)
            yield from rec(prefix, v, left - 1)
            prefix.pop()

    yield from rec([], max_part, n)


def partitions_of(size: int, max_len: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of ``size`` with no zero parts, in reverse lex order."""

    def rec(left, cap, prefix):
        if left == 0:
            yield tuple(prefix)
            return
        if max_len is not None and len(prefix) == max_len:
            return
        for v in range(min(left, cap), 0, -1):
            prefix.append(v)
            yield from rec(left - v, v, prefix)
            prefix.pop()

    yield from rec(size, size, [])


# ---------------------------------------------------------------------------
# skew shapes


@dataclass(frozen=True)
class SkewShape:
    """Outer/inner vectors of a common length n.

    Non-partition vectors are allowed so that degenerate inputs can be
    represented; :attr:`is_valid` tells whether they describe an honest skew
    shape.
    """

    outer: Tuple[int, ...]
    inner: Tuple[int, ...] = ()

    def __post_init__(self):
        n = max(len(self.outer), len(self.inner))
        object.__setattr__(self, "outer", pad(self.outer, n))
        object.__setattr__(self, "inner", pad(self.inner, n))
        if any(v < 0 for v in self.outer + self.inner):
            raise ValueError("negative part")

    @property
    def n(self) -> int:
        return len(self.outer)

    @property
    def is_valid(self) -> bool:
        return (
            is_partition(self.outer)
            and is_partition(self.inner)
            and all(m <= l for m, l in zip(self.inner, self.outer))
        )

    def padded(self, n: int) -> "SkewShape":
        return SkewShape(pad(self.outer, n), pad(self.inner, n))

    @cached_property
    def cells(self) -> Tuple[Cell, ...]:
        """Cells in fill order; empty when the shape is invalid."""
        if not self.is_valid:
            return ()
        ncols = max(self.outer, default=0)
        out: List[Cell] = []
        for c in range(ncols, 0, -1):
            for r in range(1, self.n + 1):
                if self.inner[r - 1] < c <= self.outer[r - 1]:
                    out.append((r, c))
        return tuple(out)

    @cached_property
    def _rank(self) -> Dict[Cell, int]:
        return {cell: k for k, cell in enumerate(self.cells)}

    def __contains__(self, cell: Cell) -> bool:
        return cell in self._rank

    def size(self) -> int:
        return len(self.cells)

    def transpose(self, length: Optional[int] = None) -> "SkewShape":
        """``lambda'/mu'``; length defaults to the larger first part."""
        if length is None:
            length = max(self.outer[:1] + self.inner[:1], default=0)
        return SkewShape(transpose(self.outer, length), transpose(self.inner, length))

    def __str__(self) -> str:
        return f"({format_partition(self.outer)})/({format_partition(self.inner)})"


def cell_order_rank(shape: SkewShape, cell: Cell) -> int:
    try:
        return shape._rank[cell]
    except KeyError:
        raise CellNotInShape(f"{cell} is not a cell of {shape}") from None


def precedes(a: Cell, b: Cell) -> bool:
    """Strict fill order: ``a`` comes before ``b``."""
    return a[1] > b[1] or (a[1] == b[1] and a[0] < b[0])


# ---------------------------------------------------------------------------
# flags


@dataclass(frozen=True)
class Flags:
    """Exclusive lower bounds ``alpha`` and inclusive upper bounds ``beta``."""

    alpha: Tuple[int, ...]
    beta: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "beta", tuple(self.beta))
        if len(self.alpha) != len(self.beta):
            raise ValueError("alpha and beta must have the same length")
        if any(v < 0 for v in self.alpha + self.beta):
            raise ValueError("flag values must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.alpha)

    @classmethod
    def constant(cls, n: int, upper: int, lower: int = 0) -> "Flags":
        return cls((lower,) * n, (upper,) * n)


def _check_lengths(shape: SkewShape, flags: Flags) -> None:
    if shape.n != flags.n:
        raise ValueError(f"shape has {shape.n} rows but flags have length {flags.n}")


def flag_condition_col(shape: SkewShape, flags: Flags) -> bool:
    """alpha_i <= alpha_{i+1} + 1 and beta_i <= beta_{i+1} + 1 whenever mu_i < lambda_{i+1}."""
    _check_lengths(shape, flags)
    lam, mu, a, b = shape.outer, shape.inner, flags.alpha, flags.beta
    return all(
        a[i] <= a[i + 1] + 1 and b[i] <= b[i + 1] + 1
        for i in range(shape.n - 1)
        if mu[i] < lam[i + 1]
    )


def flag_condition_row(shape: SkewShape, flags: Flags) -> bool:
    """alpha_i <= alpha_{i+1} and beta_i <= beta_{i+1} whenever mu_i < lambda_{i+1}."""
    _check_lengths(shape, flags)
    lam, mu, a, b = shape.outer, shape.inner, flags.alpha, flags.beta
    return all(
        a[i] <= a[i + 1] and b[i] <= b[i + 1]
        for i in range(shape.n - 1)
        if mu[i] < lam[i + 1]
    )


def wachs_condition_col(shape: SkewShape, flags: Flags) -> bool:
    """Flag hypothesis of the classical column-flagged Schur determinant."""
    _check_lengths(shape, flags)
    lam, mu, a, b = shape.outer, shape.inner, flags.alpha, flags.beta
    return all(
        a[i] - mu[i] <= a[i + 1] - mu[i + 1] + 1 and b[i] - lam[i] <= b[i + 1] - lam[i + 1] + 1
        for i in range(shape.n - 1)
        if mu[i] < lam[i + 1]
    )


def is_qpar(v: Sequence[int]) -> bool:
    """v_i <= v_{i+1} + 1 for all i."""
    return all(v[i] <= v[i + 1] + 1 for i in range(len(v) - 1))


def is_rpar(v: Sequence[int]) -> bool:
    """Weakly increasing."""
    return all(v[i] <= v[i + 1] for i in range(len(v) - 1))


# ---------------------------------------------------------------------------
# prefix diagrams


@dataclass(frozen=True)
class PrefixDiagram:
    shape: SkewShape
    m: int
    cells: FrozenSet[Cell] = field(init=False)

    def __post_init__(self):
        if not 0 <= self.m <= self.shape.size():
            raise OutOfRange(f"m={self.m} outside [0, {self.shape.size()}]")
        object.__setattr__(self, "cells", frozenset(self.shape.cells[: self.m]))

    def row_lengths(self) -> Tuple[int, ...]:
        counts = [0] * self.shape.n
        for r, _ in self.cells:
            counts[r - 1] += 1
        return tuple(counts)

    def next_cell(self) -> Optional[Cell]:
        cells = self.shape.cells
        return cells[self.m] if self.m < len(cells) else None


def prefix(shape: SkewShape, m: int) -> PrefixDiagram:
    return PrefixDiagram(shape, m)


def row_support(rho: PrefixDiagram) -> Set[int]:
    """Rows (1-based) holding at least one cell of ``rho``."""
    return {r for r, _ in rho.cells}


def effective_bounds(rho: PrefixDiagram, r0: Mapping[Cell, int], beta: Sequence[int]) -> Tuple[int, ...]:
    """Upper bound left for each row: the leftmost filled entry, else beta_i."""
    lam = rho.shape.outer
    lengths = rho.row_lengths()
    out = []
    for i in range(1, rho.shape.n + 1):
        if lengths[i - 1] > 0:
            out.append(r0[(i, lam[i - 1] - lengths[i - 1] + 1)])
        else:
            out.append(beta[i - 1])
    return tuple(out)


def cells_of_diagram(cells: Iterable[Cell]) -> List[Cell]:
    return sorted(cells, key=lambda c: (-c[1], c[0]))
