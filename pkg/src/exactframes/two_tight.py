"""Constructions of unit-norm 2-tight frames.

A unit-norm 2-tight frame of R^n is a ``2n x n`` matrix whose rows have
unit norm and whose columns are orthogonal with squared norm 2.  The
constructions here distribute a budget of squared weights over column
positions and then fix signs with a recursive ±1 matrix so that column
orthogonality holds exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from exactframes.errors import (DimensionError, DomainError,
                                TableValidationError)
from exactframes.matrices import ExactMatrix, hstack, vstack
from exactframes.radicals import RadicalScalar, sqrt_rational

RationalLike = Fraction | int


def _fractions(values: Sequence[RationalLike]) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class TwoRowTable:
    """Two rows of squared weights that drive :func:`weight_in_front`.

    Width must be a power of two (at least 4).  Entries are nonnegative
    rationals with each column pair summing to ``m`` and both rows
    summing to ``(width / 2) * m``; violations raise
    TableValidationError listing every failing column and both row sums.
    """

    top: tuple[Fraction, ...]
    bottom: tuple[Fraction, ...]
    m: Fraction

    def __init__(self, top: Sequence[RationalLike],
                 bottom: Sequence[RationalLike], m: RationalLike) -> None:
        object.__setattr__(self, "top", _fractions(top))
        object.__setattr__(self, "bottom", _fractions(bottom))
        object.__setattr__(self, "m", Fraction(m))
        self._validate()

    def _validate(self) -> None:
        width = len(self.top)
        if len(self.bottom) != width:
            raise TableValidationError(
                f"rows have different widths: {width} and "
                f"{len(self.bottom)}")
        if width < 4 or width & (width - 1):
            raise TableValidationError(
                f"width must be a power of two and >= 4, got {width}")
        if self.m <= 0:
            raise TableValidationError(f"m must be positive, got {self.m}")
        negatives = [j + 1 for j in range(width)
                     if self.top[j] < 0 or self.bottom[j] < 0]
        if negatives:
            raise TableValidationError(
                f"entries must be nonnegative; columns {negatives} "
                "contain negative values", bad_columns=negatives)
        bad = [j + 1 for j in range(width)
               if self.top[j] + self.bottom[j] != self.m]
        sums = (sum(self.top), sum(self.bottom))
        expected = Fraction(width, 2) * self.m
        if bad or sums[0] != expected or sums[1] != expected:
            details = []
            if bad:
                pairs = ", ".join(
                    f"column {j}: {self.top[j - 1]} + {self.bottom[j - 1]}"
                    f" = {self.top[j - 1] + self.bottom[j - 1]}"
                    for j in bad)
                details.append(f"pair sums must equal m = {self.m} ({pairs})")
            if sums[0] != expected or sums[1] != expected:
                details.append(
                    f"row sums are {sums[0]} and {sums[1]} but must both "
                    f"equal {expected}")
            raise TableValidationError(
                "; ".join(details), bad_columns=bad, row_sums=sums,
                expected_row_sum=expected)

    @property
    def width(self) -> int:
        return len(self.top)

    @property
    def order(self) -> int:
        """k with width == 2**k."""
        return self.width.bit_length() - 1


def make_two_row_table(values: Sequence[RationalLike],
                       m: RationalLike) -> TwoRowTable:
    """Build the valid table ``[values | m - reversed(values)]`` over
    ``[m - values | reversed(values)]``.

    ``values`` supplies the first half of the top row; the identities
    of :class:`TwoRowTable` then hold by construction.  Needs positive
    values, a power-of-two count of them (>= 2) and ``m >= max(values)``.
    """
    vals = _fractions(values)
    if not vals or len(vals) & (len(vals) - 1):
        raise DomainError(
            f"need a power-of-two count of values, got {len(vals)}")
    if len(vals) < 2:
        raise DomainError("need at least 2 values")
    if any(v <= 0 for v in vals):
        raise DomainError("values must be positive")
    mm = Fraction(m)
    if mm < max(vals):
        raise DomainError(
            f"m = {mm} is below the largest value {max(vals)}")
    rev = vals[::-1]
    top = vals + tuple(mm - v for v in rev)
    bottom = tuple(mm - v for v in vals) + rev
    return TwoRowTable(top, bottom, mm)


def abcd_outline(a: RationalLike, b: RationalLike, c: RationalLike,
                 d: RationalLike) -> TwoRowTable:
    """Four positive weights with ``m = a + b + c + d``: the widest
    member of :func:`make_two_row_table` that needs no extra choice of
    ``m``."""
    vals = _fractions([a, b, c, d])
    return make_two_row_table(vals, sum(vals))


def sign_matrix(order: int) -> ExactMatrix:
    """The ±1 matrix of size ``2**order`` used to orient the weights.

    Base case (order 2) is the all-ones matrix with a negative diagonal;
    each step doubles by ``[[S, S], [S, -S]]``.  Its Gram matrix is
    ``2**order * I``, so the columns stay orthogonal.
    """
    if order < 2:
        raise DomainError(f"sign matrices start at order 2, got {order}")
    s = ExactMatrix([[-1 if i == j else 1 for j in range(4)]
                     for i in range(4)])
    for _ in range(order - 2):
        s = vstack(hstack(s, s), hstack(s, s.scale(-1)))
    return s


def weight_in_front(table: TwoRowTable) -> ExactMatrix:
    """The unit-norm 2-tight frame carrying the table's weights.

    Writes ``2**k`` signed copies of each table row (k = table order):
    row ``i`` of the top half is ``sign[i][j] * sqrt(top[j] / (2^(k-1) m))``
    and the bottom half repeats this with the bottom weights and the
    same signs.  Unnormalized columns square sum to ``2**k * m`` and
    rows to ``2**(k-1) * m``; after the built-in normalization the
    result is exactly unit-norm and 2-tight.
    """
    k = table.order
    signs = sign_matrix(k)
    norm = Fraction(2) ** (k - 1) * table.m
    half = 1 << k
    rows = []
    for weights in (table.top, table.bottom):
        mags = [sqrt_rational(w / norm) for w in weights]
        for i in range(half):
            rows.append([signs.entry(i, j) * mags[j]
                         for j in range(table.width)])
    return ExactMatrix(rows)


def ap_two_tight(a: RationalLike, b: RationalLike) -> ExactMatrix:
    """The 8x4 unit-norm 2-tight frame whose squared weights form the
    arithmetic progression ``a, a+b, a+2b, a+3b`` (descending across
    the top half, ascending across the bottom), normalized by
    ``4a + 6b``, with negative signs on the block diagonals.

    Needs ``a > 0`` and ``b >= 0``.
    """
    aa, bb = Fraction(a), Fraction(b)
    if aa <= 0:
        raise DomainError(f"the progression start must be positive, got {aa}")
    if bb < 0:
        raise DomainError(f"the progression step must be >= 0, got {bb}")
    norm = 4 * aa + 6 * bb
    top = [sqrt_rational((aa + (3 - j) * bb) / norm) for j in range(4)]
    rows = [[-top[j] if i == j else top[j] for j in range(4)]
            for i in range(4)]
    upper = ExactMatrix(rows)
    return vstack(upper, upper.reverse_both())


def iterate_two_tight(left: ExactMatrix, right: ExactMatrix) -> ExactMatrix:
    """Double a pair of equal-shape blocks into
    ``[L R; L -R; R' L'; R' -L']`` with ``'`` the reversal of both axes.

    Applied to the two column halves of a unit-norm 2-tight frame this
    doubles it into another one of twice the size; the output is
    assembled structurally, so callers certify tightness themselves.
    """
    if left.shape != right.shape:
        raise DimensionError(
            f"blocks must have equal shapes, got {left.shape} and "
            f"{right.shape}")
    lr = left.reverse_both()
    rr = right.reverse_both()
    return vstack(
        vstack(hstack(left, right), hstack(left, right.scale(-1))),
        vstack(hstack(rr, lr), hstack(rr, lr.scale(-1))))
