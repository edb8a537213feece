"""Sparse polynomials with integer coefficients in the variables x1, x2, ... and t1, t2, ...

A monomial is packed into a single Python int: every variable owns a fixed
16-bit slot (x_i -> slot 2i-2, t_i -> slot 2i-1), so multiplying monomials is
integer addition.  Polynomials are immutable once built.
"""

from __future__ import annotations

import enum
import json
import re
from typing import Dict, Iterable, Iterator, Mapping, NamedTuple, Tuple

_BITS = 16
_MASK = (1 << _BITS) - 1
_MAX_DEGREE = _MASK


class Family(enum.IntEnum):
    X = 0
    T = 1


class Variable(NamedTuple):
    """A variable x_i or t_i.  Tuple order puts every x before every t."""

    family: Family
    index: int

    def __str__(self) -> str:
        return f"{'x' if self.family == Family.X else 't'}{self.index}"


def x_var(i: int) -> Variable:
    if i < 1:
        raise ValueError(f"variable index must be >= 1, got {i}")
    return Variable(Family.X, i)


def t_var(i: int) -> Variable:
    if i < 1:
        raise ValueError(f"variable index must be >= 1, got {i}")
    return Variable(Family.T, i)


class MissingAssignment(KeyError):
    """A t-variable has no value in a substitution and no default was given."""


def _slot(v: Variable) -> int:
    return 2 * (v.index - 1) + int(v.family)


def _var_of_slot(slot: int) -> Variable:
    return Variable(Family(slot & 1), slot // 2 + 1)


def _pack(exponents: Mapping[Variable, int]) -> int:
    m = 0
    for v, e in exponents.items():
        if e < 0:
            raise ValueError("negative exponent")
        if e > _MAX_DEGREE:
            raise OverflowError("exponent too large")
        if e:
            m |= e << (_BITS * _slot(v))
    return m


def _unpack(m: int) -> Dict[Variable, int]:
    out: Dict[Variable, int] = {}
    slot = 0
    while m:
        e = m & _MASK
        if e:
            out[_var_of_slot(slot)] = e
        m >>= _BITS
        slot += 1
    return out


def _degree(m: int) -> int:
    d = 0
    while m:
        d += m & _MASK
        m >>= _BITS
    return d


class Polynomial:
    """Immutable polynomial over the integers.

    ``_terms`` maps packed monomials to nonzero coefficients.  ``_degbound`` is
    an upper bound on the total degree, used to rule out slot overflow in
    products without decoding monomials.
    """

    __slots__ = ("_terms", "_degbound", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None, _degbound: int | None = None):
        clean = {m: c for m, c in (terms or {}).items() if c}
        self._terms: Dict[int, int] = clean
        if _degbound is None:
            _degbound = max((_degree(m) for m in clean), default=0)
        self._degbound = _degbound
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[int, int], degbound: int) -> "Polynomial":
        # terms must already be free of zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._degbound = degbound
        p._hash = None
        return p

    # construction -------------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls._raw({0: c} if c else {}, 0)

    @classmethod
    def var(cls, v: Variable) -> "Polynomial":
        return cls._raw({1 << (_BITS * _slot(v)): 1}, 1)

    @classmethod
    def monomial(cls, exponents: Mapping[Variable, int], coeff: int = 1) -> "Polynomial":
        return cls({_pack(exponents): coeff})

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[Mapping[Variable, int], int]]) -> "Polynomial":
        acc: Dict[int, int] = {}
        for exps, c in terms:
            m = _pack(exps)
            acc[m] = acc.get(m, 0) + c
        return cls(acc)

    # inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> Iterator[Tuple[Dict[Variable, int], int]]:
        """Yield ``(exponent map, coefficient)`` pairs in canonical order."""
        for m in self._sorted_monomials():
            yield _unpack(m), self._terms[m]

    def coefficient(self, exponents: Mapping[Variable, int]) -> int:
        return self._terms.get(_pack(exponents), 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(_degree(m) for m in self._terms)

    def variables(self) -> set:
        out = set()
        for m in self._terms:
            out.update(_unpack(m))
        return out

    def is_homogeneous(self) -> bool:
        return len({_degree(m) for m in self._terms}) <= 1

    # arithmetic ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for m, c in b.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return Polynomial._raw(out, max(self._degbound, other._degbound))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()}, self._degbound)

    def __sub__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "Polynomial":
        return Polynomial.constant(other) - self

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            if not other:
                return ZERO
            return Polynomial._raw({m: c * other for m, c in self._terms.items()}, self._degbound)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return Polynomial._raw(*_mul_terms(self, other))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # homomorphisms ------------------------------------------------------

    def map_variables(self, f) -> "Polynomial":
        """Apply a variable renaming ``f: Variable -> Variable`` to every monomial."""
        acc: Dict[int, int] = {}
        for m, c in self._terms.items():
            exps: Dict[Variable, int] = {}
            for v, e in _unpack(m).items():
                w = f(v)
                exps[w] = exps.get(w, 0) + e
            key = _pack(exps)
            acc[key] = acc.get(key, 0) + c
        return Polynomial(acc)

    def __repr__(self) -> str:
        return f"Polynomial({canonical_string(self)!r})"

    def __str__(self) -> str:
        return canonical_string(self)

    # ordering -----------------------------------------------------------

    def _sorted_monomials(self):
        return sorted(self._terms, key=_order_key)


def _mul_terms(p: Polynomial, q: Polynomial) -> Tuple[Dict[int, int], int]:
    degbound = p._degbound + q._degbound
    if degbound > _MAX_DEGREE:
        raise OverflowError("product degree exceeds the supported exponent range")
    a, b = p._terms, q._terms
    if len(a) < len(b):
        a, b = b, a
    out: Dict[int, int] = {}
    get = out.get
    for mb, cb in b.items():
        for ma, ca in a.items():
            k = ma + mb
            out[k] = get(k, 0) + ca * cb
    return {m: c for m, c in out.items() if c}, degbound


def _order_key(m: int):
    exps = _unpack(m)
    return (-sum(exps.values()), tuple((v, -e) for v, e in sorted(exps.items())))


ZERO = Polynomial._raw({}, 0)
ONE = Polynomial._raw({0: 1}, 0)


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def x(i: int) -> Polynomial:
    return Polynomial.var(x_var(i))


def t(i: int) -> Polynomial:
    return Polynomial.var(t_var(i))


def polysum(polys: Iterable[Polynomial]) -> Polynomial:
    acc: Dict[int, int] = {}
    deg = 0
    for p in polys:
        deg = max(deg, p._degbound)
        for m, c in p._terms.items():
            acc[m] = acc.get(m, 0) + c
    return Polynomial._raw({m: c for m, c in acc.items() if c}, deg)


# ---------------------------------------------------------------------------
# substitutions


def substitute_t(p: Polynomial, assignment: Mapping[int, int] | None = None, default: int | None = None) -> Polynomial:
    """Replace each t_i by ``assignment[i]`` (or ``default``).

    Values are usually 0 or 1 but any integer works.  Raises MissingAssignment
    when a t-variable of ``p`` has no value.
    """
    assignment = assignment or {}
    acc: Dict[int, int] = {}
    for m, c in p._terms.items():
        exps = _unpack(m)
        kept: Dict[Variable, int] = {}
        for v, e in exps.items():
            if v.family == Family.T:
                val = assignment.get(v.index, default)
                if val is None:
                    raise MissingAssignment(str(v))
                c *= val**e
                if not c:
                    break
            else:
                kept[v] = e
        if c:
            key = _pack(kept)
            acc[key] = acc.get(key, 0) + c
    return Polynomial(acc)


def shift_t(p: Polynomial, k: int) -> Polynomial:
    """Send every t_i to t_{i+k}; x-variables are untouched."""
    if k < 0:
        raise ValueError("shift must be nonnegative")
    if k == 0:
        return p
    return p.map_variables(lambda v: Variable(Family.T, v.index + k) if v.family == Family.T else v)


def swap_x(p: Polynomial, i: int, j: int) -> Polynomial:
    """Exchange x_i and x_j."""

    def f(v: Variable) -> Variable:
        if v.family == Family.X and v.index in (i, j):
            return Variable(Family.X, j if v.index == i else i)
        return v

    return p.map_variables(f)


# ---------------------------------------------------------------------------
# text and JSON forms


def _monomial_string(exps: Mapping[Variable, int]) -> str:
    parts = []
    for v in sorted(exps):
        e = exps[v]
        parts.append(str(v) if e == 1 else f"{v}^{e}")
    return "*".join(parts)


def canonical_string(p: Polynomial) -> str:
    """Render as e.g. ``2*x1^2*t1 - x2 + 1``; terms by degree then lex order."""
    if p.is_zero():
        return "0"
    pieces = []
    for i, (exps, c) in enumerate(p.terms()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = _monomial_string(exps)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if i == 0:
            pieces.append(("-" if sign == "-" else "") + body)
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


_FACTOR = re.compile(r"^([xt])(\d+)(?:\^(\d+))?$")


def parse_polynomial(text: str) -> Polynomial:
    """Inverse of :func:`canonical_string` (also accepts non-canonical term order)."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    tokens = re.split(r"\s+([+-])\s+", s)
    first = tokens[0]
    signs = ["+"] + tokens[1::2]
    bodies = [first] + tokens[2::2]
    if bodies[0].startswith("-"):
        signs[0], bodies[0] = "-", bodies[0][1:]
    acc: Dict[int, int] = {}
    for sign, body in zip(signs, bodies):
        coeff = 1
        exps: Dict[Variable, int] = {}
        for factor in body.split("*"):
            factor = factor.strip()
            if factor.isdigit():
                coeff *= int(factor)
                continue
            mt = _FACTOR.match(factor)
            if not mt:
                raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
            fam = Family.X if mt.group(1) == "x" else Family.T
            v = Variable(fam, int(mt.group(2)))
            if v.index < 1:
                raise ValueError(f"bad variable {factor!r}")
            exps[v] = exps.get(v, 0) + int(mt.group(3) or 1)
        if sign == "-":
            coeff = -coeff
        key = _pack(exps)
        acc[key] = acc.get(key, 0) + coeff
    return Polynomial(acc)


def to_json_obj(p: Polynomial) -> dict:
    terms = []
    for exps, c in p.terms():
        terms.append(
            {
                "coeff": str(c),
                "x": {str(v.index): e for v, e in sorted(exps.items()) if v.family == Family.X},
                "t": {str(v.index): e for v, e in sorted(exps.items()) if v.family == Family.T},
            }
        )
    return {"terms": terms}


def to_json(p: Polynomial) -> str:
    return json.dumps(to_json_obj(p))


def from_json_obj(obj: dict) -> Polynomial:
    terms = []
    for term in obj["terms"]:
        exps = {x_var(int(i)): e for i, e in term.get("x", {}).items()}
        exps.update({t_var(int(i)): e for i, e in term.get("t", {}).items()})
        terms.append((exps, int(term["coeff"])))
    return Polynomial.from_terms(terms)


def from_json(text: str) -> Polynomial:
    return from_json_obj(json.loads(text))
