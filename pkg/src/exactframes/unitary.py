"""Constructions of exactly unitary matrices.

Everything here returns an :class:`ExactMatrix` whose unitarity is
decidable (and in the tests decided) by exact arithmetic.  Conventions:
rows are the basis vectors, and sign patterns put the negative entry on
block diagonals, matching the displayed forms these families come from.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from exactframes.errors import (BlockFormError, DimensionError, DomainError,
                                PreconditionError)
from exactframes.matrices import ExactMatrix, block_diag, hstack, vstack
from exactframes.radicals import RadicalScalar, sqrt_rational
from exactframes.verify import (check_orthogonal_columns, check_unitary)


def constant_first_row(n: int) -> ExactMatrix:
    """Unitary with constant first row ``1/sqrt(n)`` and a staircase of
    zeros below: row j ends with ``n - j + 1`` equal entries preceded by
    one balancing negative entry.

    Sparsity is ``n + (n(n+1)/2 - 1)``, maximal for this row pattern.
    """
    if n < 1:
        raise DomainError(f"dimension must be >= 1, got {n}")
    if n == 1:
        return ExactMatrix([[1]])
    rows = [[sqrt_rational(Fraction(1, n))] * n]
    zero = RadicalScalar(0)
    for i in range(1, n):
        m = n - i + 1
        tail = sqrt_rational(Fraction(1, m * (m - 1)))
        row = [zero] * (i - 1)
        row.append(-(m - 1) * tail)
        row.extend([tail] * (m - 1))
        rows.append(row)
    return ExactMatrix(rows)


def constant_two_rows(two_n: int) -> ExactMatrix:
    """Unitary of even dimension whose first two rows have constant
    modulus ``1/sqrt(2n)``; below them sit two copies of the
    :func:`constant_first_row` staircase, one per column half.

    Dimension 4 has no such staircase form that stays unitary, so it
    returns the normalized all-but-diagonal sign matrix instead.
    """
    if two_n < 4 or two_n % 2:
        raise DomainError(f"dimension must be even and >= 4, got {two_n}")
    if two_n == 4:
        return _sign_core(4).scale(Fraction(1, 2))
    n = two_n // 2
    c = sqrt_rational(Fraction(1, two_n))
    rows = [[c] * two_n, [-c] * n + [c] * n]
    zero = RadicalScalar(0)
    stair = constant_first_row(n)
    for i in range(1, n):
        left = list(stair.row(i))
        rows.append(left + [zero] * n)
    for i in range(1, n):
        right = list(stair.row(i))
        rows.append([zero] * n + right)
    return ExactMatrix(rows)


def _sign_core(n: int) -> ExactMatrix:
    """The n x n all-ones matrix with -1 on the diagonal (J - 2I)."""
    return ExactMatrix([[-1 if i == j else 1 for j in range(n)]
                        for i in range(n)])


def two_constant_diag(n: int) -> ExactMatrix:
    """The unitary ``(1/n)(2J - nI)``: diagonal ``-(n-2)/n``,
    off-diagonal ``2/n``.  Symmetric and an involution."""
    if n < 2:
        raise DomainError(f"dimension must be >= 2, got {n}")
    diag = Fraction(-(n - 2), n)
    off = Fraction(2, n)
    return ExactMatrix([[diag if i == j else off for j in range(n)]
                        for i in range(n)])


class BlockForm(enum.Enum):
    """Layout of the 2x2 block doubling of a pair of unitaries.

    PLAIN is ``[[aA, bB], [aA, -bB]]``; its row Gram has off-diagonal
    blocks ``(a^2 - b^2) I``, so it is unitary only when
    ``a^2 == b^2 == 1/2``.  BALANCED is ``[[aA, bB], [bA, -aB]]`` and is
    unitary for every ``a^2 + b^2 == 1``.
    """

    PLAIN = "plain"
    BALANCED = "balanced"


def block_pair(a_mat: ExactMatrix, b_mat: ExactMatrix,
               a: RadicalScalar, b: RadicalScalar,
               form: BlockForm = BlockForm.BALANCED) -> ExactMatrix:
    """Double two n x n unitaries into a 2n x 2n unitary.

    Requires both inputs exactly unitary and ``a^2 + b^2 == 1``.  For
    PLAIN form the coefficients must additionally satisfy
    ``a^2 == b^2``; otherwise a BlockFormError carrying the exact Gram
    defect ``a^2 - b^2`` is raised.
    """
    if not (a_mat.is_square and b_mat.is_square
            and a_mat.rows == b_mat.rows):
        raise DimensionError(
            f"blocks must be square and equal size, got {a_mat.shape} "
            f"and {b_mat.shape}")
    for name, m in (("first", a_mat), ("second", b_mat)):
        if not check_unitary(m).passed:
            raise PreconditionError(f"{name} block is not unitary")
    a = RadicalScalar(a) if not isinstance(a, RadicalScalar) else a
    b = RadicalScalar(b) if not isinstance(b, RadicalScalar) else b
    if a * a + b * b != RadicalScalar(1):
        raise DomainError(
            f"coefficients must satisfy a^2 + b^2 = 1, got "
            f"a^2 + b^2 = {a * a + b * b}")
    if form is BlockForm.PLAIN:
        defect = a * a - b * b
        if not defect.is_zero:
            raise BlockFormError(
                "the plain block form is unitary only when "
                f"a^2 == b^2 == 1/2; these coefficients leave an exact "
                f"row Gram defect of {defect}", defect)
        top = hstack(a_mat.scale(a), b_mat.scale(b))
        bottom = hstack(a_mat.scale(a), b_mat.scale(-b))
        return vstack(top, bottom)
    top = hstack(a_mat.scale(a), b_mat.scale(b))
    bottom = hstack(a_mat.scale(b), b_mat.scale(-a))
    return vstack(top, bottom)


def two_constant_block_example() -> ExactMatrix:
    """The 8x8 two-constant unitary ``[[aH, bH], [bH, -aH]]`` with
    ``H = J - 2I`` (4x4), ``b = 1/sqrt(20)`` and ``a = 2b``."""
    h = _sign_core(4)
    b = sqrt_rational(Fraction(1, 20))
    a = 2 * b
    return vstack(hstack(h.scale(a), h.scale(b)),
                  hstack(h.scale(b), h.scale(-a)))


def third_case() -> ExactMatrix:
    """The 6x6 two-constant unitary with ``a = sqrt(1/12)``, ``b = 1/2``
    and sign pattern fixed by the requirement ``3a^2 - b^2 == 0``."""
    a = sqrt_rational(Fraction(1, 12))
    b = RadicalScalar(Fraction(1, 2))
    upper = [[-1, -1, 1], [-1, 1, -1], [1, -1, -1]]
    lower = [[-1, 1, 1], [1, -1, 1], [1, 1, -1]]
    rows = []
    for i in range(3):
        rows.append([a, a, a] + [s * b for s in upper[i]])
    for i in range(3):
        rows.append([s * b for s in lower[i]] + [a, a, a])
    return ExactMatrix(rows)


@dataclass(frozen=True)
class WeaveCoefficients:
    """A coefficient matrix with exactly orthogonal columns.

    Validated at construction; ``is_orthonormal`` additionally records
    whether the matrix is square with orthonormal rows, which is what
    upgrades a weave from orthogonal columns to unitarity/tightness.
    """

    matrix: ExactMatrix

    def __post_init__(self) -> None:
        report = check_orthogonal_columns(self.matrix)
        if not report.passed:
            w = report.witness
            raise PreconditionError(
                f"coefficient columns ({w.i}, {w.j}) are not orthogonal; "
                f"inner product {w.residual}")

    @property
    def is_orthonormal(self) -> bool:
        return self.matrix.is_square and check_unitary(self.matrix).passed


def weave(coeffs: WeaveCoefficients,
          blocks: list[ExactMatrix]) -> ExactMatrix:
    """Block matrix with ``(i, j)`` block ``coeffs[i, j] * blocks[j]``.

    Blocks must all have the same row count and exactly orthogonal
    columns; any inner product of two woven columns factors as a
    coefficient-column product times a block-column product, so the
    result always has exactly orthogonal columns.  With orthonormal
    square coefficients and unitary equal-size blocks the result is
    unitary; with orthonormal coefficients and unit-norm k-tight blocks
    it is again a unit-norm k-tight frame.
    """
    c = coeffs.matrix
    if c.cols != len(blocks):
        raise DimensionError(
            f"{c.cols} coefficient columns need {c.cols} blocks, "
            f"got {len(blocks)}")
    depth = blocks[0].rows
    for idx, blk in enumerate(blocks):
        if blk.rows != depth:
            raise DimensionError(
                f"blocks must have equal row counts; block {idx + 1} has "
                f"{blk.rows} rows, block 1 has {depth}")
        report = check_orthogonal_columns(blk)
        if not report.passed:
            w = report.witness
            raise PreconditionError(
                f"block {idx + 1} columns ({w.i}, {w.j}) are not "
                f"orthogonal; inner product {w.residual}")
    band_rows = []
    for i in range(c.rows):
        band = None
        for j, blk in enumerate(blocks):
            piece = blk.scale(c.entry(i, j))
            band = piece if band is None else hstack(band, piece)
        band_rows.append(band)
    out = band_rows[0]
    for band in band_rows[1:]:
        out = vstack(out, band)
    return out


def mub_r4() -> tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    """Three pairwise unbiased orthonormal bases of R^4: the identity,
    the normalized sign core, and a normalized Hadamard matrix.

    Every cross inner product between different bases squares to
    exactly 1/4.
    """
    half = Fraction(1, 2)
    b1 = ExactMatrix.identity(4)
    b2 = _sign_core(4).scale(half)
    b3 = ExactMatrix([[1, 1, 1, 1],
                      [1, -1, 1, -1],
                      [1, 1, -1, -1],
                      [1, -1, -1, 1]]).scale(half)
    return (b1, b2, b3)
