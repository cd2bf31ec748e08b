"""Exact certification of matrix properties.

Every check returns a :class:`VerifyReport`.  A passing report is an
exact certificate: the arithmetic is done in the radical-scalar ring, so
there are no tolerances on the exact paths.  Reports carry a witness for
the first failing position, with 1-based indices and the exact residual
rendered as text.

For hyperplane-basis checks on matrices with irrational entries the
normal vector is found in floating point (the report is then flagged
``approximate``); all other paths are exact regardless of the entries.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from exactframes import _kernel
from exactframes.errors import DimensionError, PreconditionError
from exactframes.matrices import ExactMatrix
from exactframes.radicals import RadicalScalar

_ONE = _kernel.make_terms(1, 1, 1)


class MatrixProperty(enum.Enum):
    UNITARY = "unitary"
    TIGHT_FRAME = "tight_frame"
    ORTHOGONAL_COLUMNS = "orthogonal_columns"
    HYPERPLANE_BASIS = "hyperplane_basis"
    UNBIASED_PAIR = "unbiased_pair"
    EQUAL_NORM_ROWS = "equal_norm_rows"


@dataclass(frozen=True)
class Witness:
    """First failing position: what failed, where and by how much.

    ``i`` and ``j`` are 1-based; ``residual`` is the exact deviation
    rendered in scalar text form.
    """

    kind: str
    i: int
    j: int
    residual: str

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "i": self.i, "j": self.j,
                "residual": self.residual}


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one property check."""

    passed: bool
    prop: MatrixProperty
    witness: Witness | None = None
    k_value: Fraction | None = None
    unit_rows: bool | None = None
    normal: tuple[Fraction, ...] | None = None
    approximate: bool = False

    def to_json_dict(self) -> dict:
        out: dict = {"passed": self.passed, "property": self.prop.value}
        if self.witness is not None:
            out["witness"] = self.witness.to_json_dict()
        if self.k_value is not None:
            out["k"] = str(self.k_value)
        if self.unit_rows is not None:
            out["unit_rows"] = self.unit_rows
        if self.normal is not None:
            out["normal"] = [str(c) for c in self.normal]
        if self.approximate:
            out["approximate"] = True
        return out


def _residual_text(terms: tuple) -> str:
    return str(RadicalScalar._raw(terms))


def _gram_witness(data, kind: str, expected_diag: tuple
                  ) -> Witness | None:
    """Scan the Gram matrix of ``data`` rows against a scaled identity.

    Returns the first mismatch in (1,1), (1,2), ... order, or None.
    """
    n = len(data)
    for i in range(n):
        for j in range(i, n):
            got = _kernel.dot_terms(data[i], data[j])
            want = expected_diag if i == j else ()
            if got != want:
                diff = _kernel.add_terms(got, _kernel.neg_terms(want))
                return Witness(kind, i + 1, j + 1, _residual_text(diff))
    return None


def check_unitary(a: ExactMatrix) -> VerifyReport:
    """Certify that a square matrix has exactly orthonormal rows.

    For square matrices the row Gram ``A A^T`` equals the identity
    exactly when the column Gram ``A^T A`` does, so one scan certifies
    unitarity; witnesses point at row pairs.
    """
    if not a.is_square:
        raise DimensionError(
            f"unitarity applies to square matrices, got {a.shape}")
    witness = _gram_witness(a._data, "row_inner_product", _ONE)
    return VerifyReport(witness is None, MatrixProperty.UNITARY, witness)


def check_orthogonal_columns(a: ExactMatrix) -> VerifyReport:
    """Certify that all column pairs are exactly orthogonal."""
    cols = a.transpose()._data
    n = len(cols)
    witness = None
    for i in range(n):
        for j in range(i + 1, n):
            got = _kernel.dot_terms(cols[i], cols[j])
            if got:
                witness = Witness("column_inner_product", i + 1, j + 1,
                                  _residual_text(got))
                break
        if witness is not None:
            break
    return VerifyReport(witness is None,
                        MatrixProperty.ORTHOGONAL_COLUMNS, witness)


def check_equal_norm_rows(a: ExactMatrix) -> VerifyReport:
    """Certify that every row has the same squared norm as row 1."""
    first = _kernel.dot_terms(a._data[0], a._data[0])
    for i in range(1, a.rows):
        got = _kernel.dot_terms(a._data[i], a._data[i])
        if got != first:
            diff = _kernel.add_terms(got, _kernel.neg_terms(first))
            return VerifyReport(
                False, MatrixProperty.EQUAL_NORM_ROWS,
                Witness("row_norm_squared", 1, i + 1, _residual_text(diff)))
    return VerifyReport(True, MatrixProperty.EQUAL_NORM_ROWS)


def check_tight_frame(a: ExactMatrix) -> VerifyReport:
    """Certify that the rows form a k-tight frame: ``A^T A == k I``.

    ``k`` must come out a positive rational; it is reported in
    ``k_value``.  ``unit_rows`` records whether every row additionally
    has exact unit norm.  Needs at least as many rows as columns.
    """
    if a.rows < a.cols:
        raise DimensionError(
            f"a frame needs rows >= cols, got {a.shape}")
    cols = a.transpose()._data
    k_terms = _kernel.dot_terms(cols[0], cols[0])
    if len(k_terms) != 1 or k_terms[0][0] != 1 or k_terms[0][1] <= 0:
        return VerifyReport(
            False, MatrixProperty.TIGHT_FRAME,
            Witness("column_norm_squared", 1, 1, _residual_text(k_terms)))
    k = Fraction(k_terms[0][1], k_terms[0][2])
    witness = _gram_witness(cols, "column_inner_product", k_terms)
    if witness is not None:
        return VerifyReport(False, MatrixProperty.TIGHT_FRAME, witness,
                            k_value=k)
    unit = all(_kernel.dot_terms(row, row) == _ONE for row in a._data)
    return VerifyReport(True, MatrixProperty.TIGHT_FRAME, k_value=k,
                        unit_rows=unit)


def _rational_entry(terms: tuple) -> Fraction | None:
    if not terms:
        return Fraction(0)
    if len(terms) == 1 and terms[0][0] == 1:
        return Fraction(terms[0][1], terms[0][2])
    return None


def _rational_nullspace(rows: list[list[Fraction]], n: int
                        ) -> tuple[Fraction, ...] | None:
    """One exact kernel vector of an (n-1) x n rational system, or None
    if the rows are linearly dependent (kernel dimension > 1)."""
    m = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [v - f * p for v, p in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    if r != n - 1:
        return None
    free = next(c for c in range(n) if c not in pivots)
    vec = [Fraction(0)] * n
    vec[free] = Fraction(1)
    for row, c in zip(m, pivots):
        vec[c] = -row[free]
    # clear denominators and common factors, keep the sign as computed
    lcm = 1
    for v in vec:
        lcm = lcm * v.denominator // _gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in vec]
    g = 0
    for v in ints:
        g = _gcd(g, abs(v))
    return tuple(Fraction(v // g) for v in ints)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def check_hyperplane_basis(a: ExactMatrix) -> VerifyReport:
    """Certify an orthogonal basis of a hyperplane with no zero normal
    coordinate.

    The matrix must be ``(n-1) x n`` with nonzero, pairwise orthogonal
    rows whose common orthogonal complement is spanned by a vector with
    all coordinates nonzero.  With rational entries the normal is
    computed exactly and reported; with irrational entries a floating
    nullspace (threshold 1e-9) is used and the report is flagged
    approximate, without a certified normal.
    """
    if a.cols != a.rows + 1:
        raise DimensionError(
            f"a hyperplane basis of R^n has shape (n-1) x n, got {a.shape}")
    data = a._data
    for i, row in enumerate(data):
        if all(not t for t in row):
            return VerifyReport(
                False, MatrixProperty.HYPERPLANE_BASIS,
                Witness("zero_row", i + 1, i + 1, "0"))
    for i in range(len(data)):
        for j in range(i + 1, len(data)):
            got = _kernel.dot_terms(data[i], data[j])
            if got:
                return VerifyReport(
                    False, MatrixProperty.HYPERPLANE_BASIS,
                    Witness("row_inner_product", i + 1, j + 1,
                            _residual_text(got)))
    rational = []
    for row in data:
        frow = []
        for t in row:
            q = _rational_entry(t)
            if q is None:
                break
            frow.append(q)
        else:
            rational.append(frow)
            continue
        break
    if len(rational) == a.rows:
        normal = _rational_nullspace(rational, a.cols)
        if normal is None:
            return VerifyReport(
                False, MatrixProperty.HYPERPLANE_BASIS,
                Witness("rank_deficient", a.rows, a.rows,
                        "rows are linearly dependent"))
        zero = next((j for j, c in enumerate(normal) if c == 0), None)
        if zero is not None:
            return VerifyReport(
                False, MatrixProperty.HYPERPLANE_BASIS,
                Witness("normal_zero_coordinate", 1, zero + 1, "0"),
                normal=normal)
        return VerifyReport(True, MatrixProperty.HYPERPLANE_BASIS,
                            normal=normal)
    return _float_hyperplane(a)


def _float_hyperplane(a: ExactMatrix) -> VerifyReport:
    import numpy as np

    f = np.array(a.to_float_rows())
    _, s, vt = np.linalg.svd(f)
    if len(s) == a.rows and s[-1] <= 1e-9 * max(1.0, s[0]):
        return VerifyReport(
            False, MatrixProperty.HYPERPLANE_BASIS,
            Witness("rank_deficient", a.rows, a.rows,
                    "rows are numerically dependent"),
            approximate=True)
    normal = vt[-1]
    zero = next((j for j, c in enumerate(normal) if abs(c) <= 1e-9), None)
    if zero is not None:
        return VerifyReport(
            False, MatrixProperty.HYPERPLANE_BASIS,
            Witness("normal_zero_coordinate", 1, zero + 1, "0"),
            approximate=True)
    return VerifyReport(True, MatrixProperty.HYPERPLANE_BASIS,
                        approximate=True)


def check_unbiased_pair(b1: ExactMatrix, b2: ExactMatrix) -> VerifyReport:
    """Certify that two orthonormal bases are unbiased: every cross
    inner product squares to exactly ``1/n``.

    Raises PreconditionError naming the offending input when either
    matrix is not exactly unitary or the shapes differ.
    """
    if b1.shape != b2.shape:
        raise DimensionError(
            f"bases must share a shape, got {b1.shape} and {b2.shape}")
    for name, b in (("first", b1), ("second", b2)):
        report = check_unitary(b)
        if not report.passed:
            w = report.witness
            raise PreconditionError(
                f"{name} basis is not orthonormal: rows ({w.i}, {w.j}) "
                f"have inner product residual {w.residual}")
    n = b1.rows
    target = _kernel.make_terms(1, n, 1)
    witness = None
    for i in range(n):
        for j in range(n):
            c = _kernel.dot_terms(b1._data[i], b2._data[j])
            csq = _kernel.mul_terms(c, c)
            if csq != target:
                diff = _kernel.add_terms(csq, _kernel.neg_terms(target))
                witness = Witness("cross_product_squared", i + 1, j + 1,
                                  _residual_text(diff))
                break
        if witness is not None:
            break
    return VerifyReport(witness is None, MatrixProperty.UNBIASED_PAIR,
                        witness)
