"""Signed sums of distinct variables and plethystic e_k / h_k on them."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Tuple

from .polyring import ONE, ZERO, Polynomial, Variable, _BITS, _slot, x_var, t_var


class RepeatedVariableError(ValueError):
    """An alphabet would contain some variable with multiplicity 2 or more."""


class Alphabet:
    """Formal sum ``plus - minus`` of distinct variables.

    Variables present on both sides cancel at construction, so the two parts
    are always disjoint.
    """

    __slots__ = ("plus", "minus", "_hash")

    def __init__(self, plus: Iterable[Variable] = (), minus: Iterable[Variable] = ()):
        p, m = list(plus), list(minus)
        if len(set(p)) != len(p) or len(set(m)) != len(m):
            raise RepeatedVariableError("alphabet variables must be distinct")
        sp, sm = set(p), set(m)
        common = sp & sm
        self.plus: Tuple[Variable, ...] = tuple(sorted(sp - common))
        self.minus: Tuple[Variable, ...] = tuple(sorted(sm - common))
        self._hash = hash((self.plus, self.minus))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Alphabet):
            return NotImplemented
        return self.plus == other.plus and self.minus == other.minus

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: "Alphabet") -> "Alphabet":
        return combine(self, other, "+")

    def __sub__(self, other: "Alphabet") -> "Alphabet":
        return combine(self, other, "-")

    def __neg__(self) -> "Alphabet":
        return Alphabet(self.minus, self.plus)

    def __len__(self) -> int:
        return len(self.plus) + len(self.minus)

    def is_empty(self) -> bool:
        return not self.plus and not self.minus

    def __str__(self) -> str:
        out = "+{" + ",".join(map(str, self.plus)) + "}"
        if self.minus:
            out += "-{" + ",".join(map(str, self.minus)) + "}"
        return out

    def __repr__(self) -> str:
        return f"Alphabet({self})"


EMPTY = Alphabet()


def x_interval(r: int, s: int) -> Alphabet:
    """``x_{r+1} + ... + x_s``; empty when r >= s."""
    if r < 0:
        raise ValueError("left end of an x-interval must be nonnegative")
    return Alphabet(x_var(i) for i in range(r + 1, s + 1))


def t_prefix(i: int) -> Alphabet:
    """``t_1 + ... + t_i``; empty when i <= 0."""
    return Alphabet(t_var(k) for k in range(1, i + 1))


def combine(a: Alphabet, b: Alphabet, sign: str = "+") -> Alphabet:
    """Signed union ``a + b`` or ``a - b`` with cancellation."""
    if sign == "-":
        b = -b
    elif sign != "+":
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    # Cancel across the two operands first; what survives must be multiplicity-free.
    plus = list(a.plus)
    minus = list(a.minus)
    for v in b.plus:
        if v in minus:
            minus.remove(v)
        elif v in plus:
            raise RepeatedVariableError(f"{v} would appear twice")
        else:
            plus.append(v)
    for v in b.minus:
        if v in plus:
            plus.remove(v)
        elif v in minus:
            raise RepeatedVariableError(f"-{v} would appear twice")
        else:
            minus.append(v)
    return Alphabet(plus, minus)


# ---------------------------------------------------------------------------
# e_k and h_k of an explicit list of variables (dynamic programming)


def _var_monomial(v: Variable) -> int:
    return 1 << (_BITS * _slot(v))


def _elementary_table(vs: Tuple[Variable, ...], kmax: int):
    """Term dicts of e_0..e_kmax in the variables ``vs``."""
    table = [{0: 1}] + [{} for _ in range(kmax)]
    for v in vs:
        mv = _var_monomial(v)
        for k in range(kmax, 0, -1):
            prev = table[k - 1]
            if not prev:
                continue
            cur = table[k]
            for m, c in prev.items():
                key = m + mv
                cur[key] = cur.get(key, 0) + c
    return table


def _complete_table(vs: Tuple[Variable, ...], kmax: int):
    """Term dicts of h_0..h_kmax in the variables ``vs``."""
    table = [{0: 1}] + [{} for _ in range(kmax)]
    for v in vs:
        mv = _var_monomial(v)
        # h_k(vs + v) = sum_{j} v^j h_{k-j}(vs): ascending k reuses updated rows
        for k in range(1, kmax + 1):
            prev = table[k - 1]
            cur = table[k]
            for m, c in prev.items():
                key = m + mv
                cur[key] = cur.get(key, 0) + c
    return table


@lru_cache(maxsize=None)
def elementary(k: int, vs: Tuple[Variable, ...]) -> Polynomial:
    """``e_k`` of the distinct variables ``vs``."""
    if k < 0 or k > len(vs):
        return ZERO
    if k == 0:
        return ONE
    return Polynomial._raw(_elementary_table(vs, k)[k], k)


@lru_cache(maxsize=None)
def complete(k: int, vs: Tuple[Variable, ...]) -> Polynomial:
    """``h_k`` of the variables ``vs``."""
    if k < 0:
        return ZERO
    if k == 0:
        return ONE
    if not vs:
        return ZERO
    return Polynomial._raw(_complete_table(vs, k)[k], k)


# ---------------------------------------------------------------------------
# plethystic evaluation


@lru_cache(maxsize=None)
def e_pleth(k: int, a: Alphabet) -> Polynomial:
    """``e_k[plus - minus] = sum_i e_{k-i}[plus] (-1)^i h_i[minus]``."""
    if k < 0:
        return ZERO
    if k == 0:
        return ONE
    if not a.minus:
        return elementary(k, a.plus)
    acc = ZERO
    for i in range(0, k + 1):
        ep = elementary(k - i, a.plus)
        if ep.is_zero():
            continue
        hm = complete(i, a.minus)
        term = ep * hm
        acc = acc - term if i % 2 else acc + term
    return acc


@lru_cache(maxsize=None)
def h_pleth(k: int, a: Alphabet) -> Polynomial:
    """``h_k[plus - minus] = sum_i h_{k-i}[plus] (-1)^i e_i[minus]``."""
    if k < 0:
        return ZERO
    if k == 0:
        return ONE
    if not a.minus:
        return complete(k, a.plus)
    acc = ZERO
    for i in range(0, min(k, len(a.minus)) + 1):
        hp = complete(k - i, a.plus)
        if hp.is_zero():
            continue
        term = hp * elementary(i, a.minus)
        acc = acc - term if i % 2 else acc + term
    return acc


def alphabet_of(*parts: Tuple[str, Alphabet]) -> Alphabet:
    """Fold ``("+", A), ("-", B), ...`` into one alphabet."""
    out = EMPTY
    for sign, a in parts:
        out = combine(out, a, sign)
    return out


__all__ = [
    "Alphabet",
    "EMPTY",
    "RepeatedVariableError",
    "alphabet_of",
    "combine",
    "complete",
    "e_pleth",
    "elementary",
    "h_pleth",
    "t_prefix",
    "x_interval",
]
