"""Sparse orthogonal bases for hyperplanes of R^n.

A hyperplane basis here is an ``(n-1) x n`` integer matrix whose rows
are nonzero, pairwise orthogonal, and orthogonal to a normal vector
with every coordinate nonzero (so the hyperplane contains no span of a
subset of the coordinate basis).  Rows are kept unnormalized to
preserve sparsity and integrality; :meth:`ExactMatrix.normalize_rows`
turns any of them into an orthonormal basis exactly.

Larger bases are produced by :func:`combine`, which stacks two blocks
diagonally and prepends one new row spanning both column groups.  The
two top-row modes differ in what that new row looks like and what the
combined normal is; :func:`build` picks block sizes recursively so the
result is as sparse as this family allows.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from exactframes.errors import CombineModeError, DomainError
from exactframes.matrices import ExactMatrix, block_diag
from exactframes import matrices


class TopRowMode(enum.Enum):
    """How :func:`combine` forms the new top row.

    ONES: both blocks are first brought to a form whose rows are
    orthogonal to the all-ones vector; the top row is all ones and the
    combined normal is the integer vector ``(q, ..., q, -p, ..., -p)``
    reduced by ``gcd(p, q)``.

    WEIGHTED: blocks are used exactly as given.  With block normals
    ``u`` (length p) and ``v`` (length q) the top row is
    ``(|v|^2 u | -|u|^2 v)`` and the combined normal is ``(u | v)``.
    """

    ONES = "ones"
    WEIGHTED = "weighted"


@dataclass(frozen=True)
class HyperplaneBasis:
    """An exact hyperplane basis with its certified normal vector."""

    matrix: ExactMatrix
    normal: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return self.matrix.cols

    @property
    def sparsity(self) -> int:
        return self.matrix.sparsity()


_BASE_ROWS = {
    2: ([[1, 1]], (1, -1)),
    3: ([[1, 2, 1], [0, -1, 2]], (-5, 2, 1)),
    4: ([[1, 1, 1, 1], [1, -1, 0, 0], [0, 0, 1, -1]], (1, 1, -1, -1)),
}


def base_case(n: int) -> HyperplaneBasis:
    """The hand-built bases for dimensions 2, 3 and 4."""
    if n not in _BASE_ROWS:
        raise DomainError(f"base cases exist for n in (2, 3, 4), not {n}")
    rows, normal = _BASE_ROWS[n]
    return HyperplaneBasis(ExactMatrix(rows), normal)


def _as_int_rows(m: ExactMatrix) -> list[list[int]]:
    out = []
    for i in range(m.rows):
        row = []
        for j in range(m.cols):
            q = m.entry(i, j).as_fraction()
            if q.denominator != 1:
                raise DomainError("hyperplane blocks must have integer "
                                  f"entries, found {q} at ({i + 1}, {j + 1})")
            row.append(q.numerator)
        out.append(row)
    return out


def _ones_form(h: HyperplaneBasis) -> HyperplaneBasis | None:
    """Equivalent basis whose normal is all ones, or None.

    If every row is orthogonal to the ones vector the basis already has
    a ones normal.  Otherwise, when some row is proportional to ones,
    swapping that row with the stored normal yields a valid basis of
    the same hyperplane arrangement with an all-ones normal (the
    orthogonality relations carry over exactly).  Any other shape
    cannot be brought into ones form.
    """
    rows = _as_int_rows(h.matrix)
    n = h.dimension
    dots = [sum(row) for row in rows]
    if all(d == 0 for d in dots):
        return h
    for i, row in enumerate(rows):
        base = row[0]
        if base != 0 and all(v == base for v in row):
            swapped = [list(h.normal) if k == i else r
                       for k, r in enumerate(rows)]
            return HyperplaneBasis(ExactMatrix(swapped), (1,) * n)
    return None


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def combine(h1: HyperplaneBasis, h2: HyperplaneBasis,
            mode: TopRowMode | None = None) -> HyperplaneBasis:
    """Stack two bases diagonally and prepend a joint top row.

    ``mode=None`` chooses automatically: ONES when both blocks can be
    brought to ones form (this keeps the top row sparse in weight and
    the entries small), WEIGHTED otherwise.  Explicit ONES raises
    CombineModeError when a block has no ones form; explicit WEIGHTED
    uses the blocks exactly as given.
    """
    if mode is None:
        f1, f2 = _ones_form(h1), _ones_form(h2)
        if f1 is not None and f2 is not None:
            return _combine_ones(f1, f2)
        return _combine_weighted(h1, h2)
    if mode is TopRowMode.ONES:
        f1, f2 = _ones_form(h1), _ones_form(h2)
        if f1 is None or f2 is None:
            which = "first" if f1 is None else "second"
            raise CombineModeError(
                f"the {which} block has no row proportional to ones and "
                "its rows are not orthogonal to ones; use WEIGHTED mode")
        return _combine_ones(f1, f2)
    return _combine_weighted(h1, h2)


def _combine_ones(h1: HyperplaneBasis, h2: HyperplaneBasis
                  ) -> HyperplaneBasis:
    p, q = h1.dimension, h2.dimension
    top = ExactMatrix([[1] * (p + q)])
    stacked = matrices.vstack(top, block_diag([h1.matrix, h2.matrix]))
    g = _gcd(p, q)
    normal = (q // g,) * p + (-(p // g),) * q
    return HyperplaneBasis(stacked, normal)


def _combine_weighted(h1: HyperplaneBasis, h2: HyperplaneBasis
                      ) -> HyperplaneBasis:
    u, v = h1.normal, h2.normal
    wu = sum(c * c for c in u)
    wv = sum(c * c for c in v)
    top = ExactMatrix([[wv * c for c in u] + [-wu * c for c in v]])
    stacked = matrices.vstack(top, block_diag([h1.matrix, h2.matrix]))
    return HyperplaneBasis(stacked, tuple(u) + tuple(v))


def _split(n: int) -> tuple[int, int]:
    """Block dimensions for :func:`build`, larger block first."""
    if n % 2 == 0:
        if n % 4 == 0:
            return (n // 2, n // 2)
        return (n // 2 + 1, n // 2 - 1)
    # n odd: n = 2^k + 1 + 2i with 2^k the largest power below n;
    # blocks have dimensions 2^(k-1) + 2i and 2^(k-1) + 1
    k = (n - 1).bit_length() - 1
    i2 = n - 1 - (1 << k)
    p = (1 << (k - 1)) + i2
    q = (1 << (k - 1)) + 1
    return (max(p, q), min(p, q))


def build(n: int) -> HyperplaneBasis:
    """Recursively build the sparse hyperplane basis for R^n (n >= 2)."""
    if n < 2:
        raise DomainError(f"hyperplanes of R^n need n >= 2, got {n}")
    if n <= 4:
        return base_case(n)
    p, q = _split(n)
    return combine(build(p), build(q), None)


def predicted_sparsity(n: int) -> int:
    """Nonzero count of ``build(n)`` from the size recursion alone."""
    if n < 2:
        raise DomainError(f"hyperplanes of R^n need n >= 2, got {n}")
    if n <= 4:
        return {2: 2, 3: 5, 4: 8}[n]
    p, q = _split(n)
    return n + predicted_sparsity(p) + predicted_sparsity(q)
