"""Exact scalars of the form ``sum(q_r * sqrt(r))``.

Each scalar is a finite sum of rational multiples of square roots of
distinct squarefree positive integers; the rational part is the ``r == 1``
term.  This set is closed under addition, negation and multiplication
(products of roots reduce via ``sqrt(a)*sqrt(b) == outer*sqrt(core)``
with ``a*b == outer**2 * core``), which is all the constructions here
need.  There is no division and no ordering.

Equality is structural on the canonical term tuple, so ``==`` decides
exact mathematical equality.  ``RadicalScalar`` is immutable and
hashable.

Text form, accepted by :func:`parse_scalar` and produced by ``str()``:

    scalar  :=  ["+"|"-"] term (("+"|"-") term)*
    term    :=  rational | rational "*" root | root
    rational:=  integer ["/" integer]
    root    :=  "sqrt(" integer ")"

Canonical output orders terms by ascending radicand, writes the rational
part first and omits unit coefficients, e.g. ``1/2 - 1/4*sqrt(7)``.
"""

from __future__ import annotations

import re
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Union

from exactframes import _kernel
from exactframes.errors import DomainError, ParseError

RationalLike = Union[int, Fraction]

_DEC_PRECISION = 40
_DEC_SQRT: dict[int, Decimal] = {}


class RadicalScalar:
    """Immutable exact sum of rational multiples of square roots."""

    __slots__ = ("_terms",)

    def __init__(self, value: RationalLike | RadicalScalar = 0) -> None:
        if isinstance(value, RadicalScalar):
            self._terms = value._terms
        else:
            q = Fraction(value)
            self._terms = _kernel.make_terms(q.numerator, q.denominator, 1)

    @classmethod
    def _raw(cls, terms: tuple) -> RadicalScalar:
        self = object.__new__(cls)
        self._terms = terms
        return self

    @property
    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        """Pairs ``(radicand, coefficient)`` in ascending radicand order."""
        return tuple((r, Fraction(n, d)) for r, n, d in self._terms)

    @property
    def radicands(self) -> tuple[int, ...]:
        return tuple(r for r, _, _ in self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_rational(self) -> bool:
        return len(self._terms) == 0 or (
            len(self._terms) == 1 and self._terms[0][0] == 1)

    def coefficient(self, radicand: int) -> Fraction:
        """Coefficient of ``sqrt(radicand)``; radicand need not be squarefree."""
        if radicand < 1:
            raise DomainError("radicand must be a positive integer")
        outer, core = _kernel.squarefree_split(radicand)
        for r, n, d in self._terms:
            if r == core:
                return Fraction(n, d) / outer
        return Fraction(0)

    def as_fraction(self) -> Fraction:
        """The exact rational value; raises DomainError if irrational."""
        if not self._terms:
            return Fraction(0)
        if len(self._terms) == 1 and self._terms[0][0] == 1:
            return Fraction(self._terms[0][1], self._terms[0][2])
        raise DomainError(f"scalar {self} is not rational")

    def to_float(self) -> float:
        """Nearest binary float, via 40-digit decimal evaluation."""
        if not self._terms:
            return 0.0
        with localcontext() as ctx:
            ctx.prec = _DEC_PRECISION
            total = Decimal(0)
            for r, n, d in self._terms:
                c = Decimal(n) / Decimal(d)
                if r != 1:
                    c *= _dec_sqrt(r)
                total += c
            return float(total)

    def __add__(self, other: object) -> RadicalScalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RadicalScalar._raw(_kernel.add_terms(self._terms, other._terms))

    __radd__ = __add__

    def __neg__(self) -> RadicalScalar:
        return RadicalScalar._raw(_kernel.neg_terms(self._terms))

    def __sub__(self, other: object) -> RadicalScalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RadicalScalar._raw(
            _kernel.add_terms(self._terms, _kernel.neg_terms(other._terms)))

    def __rsub__(self, other: object) -> RadicalScalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__sub__(self)

    def __mul__(self, other: object) -> RadicalScalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RadicalScalar._raw(_kernel.mul_terms(self._terms, other._terms))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RadicalScalar):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == RadicalScalar(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"RadicalScalar({format_scalar(self)!r})"


def _coerce(value: object):
    if isinstance(value, RadicalScalar):
        return value
    if isinstance(value, (int, Fraction)):
        return RadicalScalar(value)
    return NotImplemented


def _dec_sqrt(radicand: int) -> Decimal:
    cached = _DEC_SQRT.get(radicand)
    if cached is None:
        with localcontext() as ctx:
            ctx.prec = _DEC_PRECISION + 5
            cached = Decimal(radicand).sqrt()
        _DEC_SQRT[radicand] = cached
    return cached


ZERO = RadicalScalar(0)
ONE = RadicalScalar(1)


def make(coeff: RationalLike, radicand: int) -> RadicalScalar:
    """The scalar ``coeff * sqrt(radicand)``.

    ``radicand`` must be a positive integer; non-squarefree values are
    normalized, e.g. ``make(1, 12) == make(2, 3)``.
    """
    if not isinstance(radicand, int) or radicand < 1:
        raise DomainError("radicand must be a positive integer")
    q = Fraction(coeff)
    return RadicalScalar._raw(
        _kernel.make_terms(q.numerator, q.denominator, radicand))


def sqrt_rational(value: RationalLike) -> RadicalScalar:
    """Exact square root of a nonnegative rational:
    ``sqrt(p/q) == (1/q) * sqrt(p*q)``."""
    q = Fraction(value)
    if q < 0:
        raise DomainError("cannot take a real square root of a negative value")
    if q == 0:
        return ZERO
    return make(Fraction(1, q.denominator), q.numerator * q.denominator)


def add(x: RadicalScalar, y: RadicalScalar) -> RadicalScalar:
    return x + y


def mul(x: RadicalScalar, y: RadicalScalar) -> RadicalScalar:
    return x * y


def is_zero(x: RadicalScalar) -> bool:
    return x.is_zero


def to_float(x: RadicalScalar) -> float:
    return x.to_float()


def format_scalar(x: RadicalScalar) -> str:
    """Canonical text form; round-trips through :func:`parse_scalar`."""
    terms = x._terms
    if not terms:
        return "0"
    parts: list[str] = []
    for r, n, d in terms:
        if parts:
            parts.append(" - " if n < 0 else " + ")
            mag = -n if n < 0 else n
        else:
            mag = n if n > 0 else -n
            if n < 0:
                parts.append("-")
        coeff = str(mag) if d == 1 else f"{mag}/{d}"
        if r == 1:
            parts.append(coeff)
        elif mag == 1 and d == 1:
            parts.append(f"sqrt({r})")
        else:
            parts.append(f"{coeff}*sqrt({r})")
    return "".join(parts)


_TOKEN = re.compile(r"\s*(\d+|sqrt|[()*/+-])")


def _tokenize(text: str) -> list[str]:
    tokens: list[str] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:].strip()
            if not rest:
                break
            raise ParseError(
                f"unexpected character {rest[0]!r} at position {pos}")
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


def parse_scalar(text: str, notes: list[str] | None = None) -> RadicalScalar:
    """Parse the scalar text grammar (inverse of :func:`format_scalar`).

    Non-squarefree radicands are normalized; when ``notes`` is given a
    message is appended for each normalization.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty scalar text")
    pos = 0

    def peek() -> str | None:
        return tokens[pos] if pos < len(tokens) else None

    def take(expected: str | None = None) -> str:
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError(f"unexpected end of scalar text {text!r}")
        tok = tokens[pos]
        if expected is not None and tok != expected:
            raise ParseError(
                f"expected {expected!r} but found {tok!r} in {text!r}")
        pos += 1
        return tok

    def parse_int() -> int:
        tok = take()
        if not tok.isdigit():
            raise ParseError(f"expected an integer but found {tok!r}"
                             f" in {text!r}")
        return int(tok)

    def parse_root() -> int:
        take("sqrt")
        take("(")
        rad = parse_int()
        take(")")
        if rad < 1:
            raise ParseError(f"radicand must be positive in {text!r}")
        if notes is not None and not _kernel.is_squarefree(rad):
            notes.append(
                f"radicand {rad} is not squarefree; normalized to "
                f"{format_scalar(make(1, rad))}")
        return rad

    def parse_term() -> RadicalScalar:
        if peek() == "sqrt":
            return make(1, parse_root())
        num = parse_int()
        den = 1
        if peek() == "/":
            take("/")
            den = parse_int()
            if den == 0:
                raise ParseError(f"zero denominator in {text!r}")
        rad = 1
        if peek() == "*":
            take("*")
            rad = parse_root()
        return make(Fraction(num, den), rad)

    sign = 1
    if peek() in ("+", "-"):
        if take() == "-":
            sign = -1
    result = parse_term() * sign
    while pos < len(tokens):
        op = take()
        if op not in ("+", "-"):
            raise ParseError(f"expected '+' or '-' but found {op!r}"
                             f" in {text!r}")
        term = parse_term()
        result = result - term if op == "-" else result + term
    return result
