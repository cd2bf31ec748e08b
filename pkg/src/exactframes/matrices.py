"""Dense exact matrices over :class:`~exactframes.radicals.RadicalScalar`.

Rows are the frame vectors throughout the package: an ``M x N`` matrix
holds ``M`` vectors in ``R^N`` as its rows, so the synthesis operator of
a frame is the transpose.  Matrices are immutable; all arithmetic is
exact and ``==`` is exact entrywise equality.

Internally each entry is a canonical kernel term tuple, which keeps the
hot paths (Gram matrices, products) free of wrapper objects.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from exactframes import _kernel
from exactframes.errors import DimensionError, DomainError
from exactframes.radicals import RadicalScalar, sqrt_rational

EntryLike = RadicalScalar | Fraction | int


def _entry_terms(value: EntryLike) -> tuple:
    if isinstance(value, RadicalScalar):
        return value._terms
    q = Fraction(value)
    return _kernel.make_terms(q.numerator, q.denominator, 1)


class ExactMatrix:
    """Immutable dense matrix with exact radical-scalar entries."""

    __slots__ = ("_rows", "_cols", "_data")

    def __init__(self, rows: Iterable[Iterable[EntryLike]]) -> None:
        data = tuple(tuple(_entry_terms(v) for v in row) for row in rows)
        if not data:
            raise DimensionError("matrix needs at least one row")
        width = len(data[0])
        if width == 0:
            raise DimensionError("matrix needs at least one column")
        if any(len(row) != width for row in data):
            raise DimensionError("rows have unequal lengths")
        self._rows = len(data)
        self._cols = width
        self._data = data

    @classmethod
    def _raw(cls, rows: int, cols: int, data: tuple) -> ExactMatrix:
        self = object.__new__(cls)
        self._rows = rows
        self._cols = cols
        self._data = data
        return self

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        if n < 1:
            raise DimensionError("identity needs n >= 1")
        one = _kernel.make_terms(1, 1, 1)
        return cls._raw(n, n, tuple(
            tuple(one if i == j else () for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return (self._rows, self._cols)

    @property
    def is_square(self) -> bool:
        return self._rows == self._cols

    def entry(self, i: int, j: int) -> RadicalScalar:
        """Entry at 0-based position ``(i, j)``."""
        return RadicalScalar._raw(self._data[i][j])

    def row(self, i: int) -> tuple[RadicalScalar, ...]:
        return tuple(RadicalScalar._raw(t) for t in self._data[i])

    def column(self, j: int) -> tuple[RadicalScalar, ...]:
        return tuple(RadicalScalar._raw(row[j]) for row in self._data)

    def transpose(self) -> ExactMatrix:
        return ExactMatrix._raw(self._cols, self._rows,
                                tuple(zip(*self._data)))

    def matmul(self, other: ExactMatrix) -> ExactMatrix:
        if self._cols != other._rows:
            raise DimensionError(
                f"cannot multiply {self.shape} by {other.shape}")
        product = _kernel.matmul_terms(self._data, other._data)
        return ExactMatrix._raw(self._rows, other._cols,
                                tuple(tuple(row) for row in product))

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        return self.matmul(other)

    def scale(self, factor: EntryLike) -> ExactMatrix:
        """Multiply every entry by an exact scalar."""
        f = _entry_terms(factor)
        if len(f) == 1 and f[0][0] == 1:
            _, num, den = f[0]
            data = tuple(tuple(_kernel.scale_terms(t, num, den)
                               for t in row) for row in self._data)
        else:
            data = tuple(tuple(_kernel.mul_terms(t, f) for t in row)
                         for row in self._data)
        return ExactMatrix._raw(self._rows, self._cols, data)

    def reverse_rows(self) -> ExactMatrix:
        return ExactMatrix._raw(self._rows, self._cols, self._data[::-1])

    def reverse_cols(self) -> ExactMatrix:
        return ExactMatrix._raw(self._rows, self._cols,
                                tuple(row[::-1] for row in self._data))

    def reverse_both(self) -> ExactMatrix:
        return ExactMatrix._raw(self._rows, self._cols,
                                tuple(row[::-1] for row in self._data[::-1]))

    def sparsity(self) -> int:
        """Number of nonzero entries."""
        return sum(1 for row in self._data for t in row if t)

    def row_norm_squared(self, i: int) -> RadicalScalar:
        return RadicalScalar._raw(
            _kernel.dot_terms(self._data[i], self._data[i]))

    def normalize_rows(self) -> ExactMatrix:
        """Scale each row to unit Euclidean norm.

        Exact only when every squared row norm is rational (true for all
        integer matrices); raises DomainError otherwise or on zero rows.
        """
        out = []
        for i, row in enumerate(self._data):
            nsq = _kernel.dot_terms(row, row)
            if not nsq:
                raise DomainError(f"row {i + 1} is zero, cannot normalize")
            if len(nsq) != 1 or nsq[0][0] != 1:
                raise DomainError(
                    f"row {i + 1} has irrational squared norm; "
                    "exact normalization is not available")
            factor = sqrt_rational(Fraction(nsq[0][2], nsq[0][1]))._terms
            out.append(tuple(_kernel.mul_terms(t, factor) for t in row))
        return ExactMatrix._raw(self._rows, self._cols, tuple(out))

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        d = self._data
        return all(d[i][j] == d[j][i]
                   for i in range(self._rows) for j in range(i))

    def to_float_rows(self) -> list[list[float]]:
        return [[RadicalScalar._raw(t).to_float() for t in row]
                for row in self._data]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __str__(self) -> str:
        cells = [[str(RadicalScalar._raw(t)) for t in row]
                 for row in self._data]
        widths = [max(len(cells[i][j]) for i in range(self._rows))
                  for j in range(self._cols)]
        return "\n".join(
            "[" + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + "]"
            for row in cells)

    def __repr__(self) -> str:
        return f"<ExactMatrix {self._rows}x{self._cols}>"


def hstack(left: ExactMatrix, right: ExactMatrix) -> ExactMatrix:
    if left.rows != right.rows:
        raise DimensionError(
            f"hstack needs equal row counts, got {left.shape} and "
            f"{right.shape}")
    data = tuple(a + b for a, b in zip(left._data, right._data))
    return ExactMatrix._raw(left.rows, left.cols + right.cols, data)


def vstack(top: ExactMatrix, bottom: ExactMatrix) -> ExactMatrix:
    if top.cols != bottom.cols:
        raise DimensionError(
            f"vstack needs equal column counts, got {top.shape} and "
            f"{bottom.shape}")
    return ExactMatrix._raw(top.rows + bottom.rows, top.cols,
                            top._data + bottom._data)


def block_diag(blocks: Sequence[ExactMatrix]) -> ExactMatrix:
    if not blocks:
        raise DimensionError("block_diag needs at least one block")
    total_cols = sum(b.cols for b in blocks)
    data = []
    offset = 0
    for b in blocks:
        for row in b._data:
            data.append(((),) * offset + row
                        + ((),) * (total_cols - offset - b.cols))
        offset += b.cols
    return ExactMatrix._raw(len(data), total_cols, tuple(data))


def from_fraction_rows(rows: Sequence[Sequence[Fraction | int]]
                       ) -> ExactMatrix:
    """Convenience constructor from nested rationals."""
    return ExactMatrix(rows)
