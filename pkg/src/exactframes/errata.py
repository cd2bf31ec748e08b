"""Machine-verified discrepancies between the published description of
these constructions and what exact arithmetic certifies.

Each finding reconstructs the published variant, runs the relevant
exact check, and reports what actually holds together with the witness.
``findings()`` re-executes all of them; a finding whose ``reproduced``
flag comes back False would mean the published variant no longer
misbehaves under this package's checkers (i.e. a regression in the
checkers themselves).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from exactframes.errors import BlockFormError, TableValidationError
from exactframes.matrices import ExactMatrix
from exactframes.radicals import RadicalScalar, sqrt_rational
from exactframes.two_tight import TwoRowTable, make_two_row_table
from exactframes.unitary import BlockForm, block_pair, mub_r4
from exactframes.verify import check_unbiased_pair, check_unitary


@dataclass(frozen=True)
class Finding:
    """One verified discrepancy."""

    ident: str
    claim: str
    actual: str
    witness: str
    reproduced: bool

    def to_json_dict(self) -> dict:
        return {"id": self.ident, "claim": self.claim, "actual": self.actual,
                "witness": self.witness, "reproduced": self.reproduced}


def plain_block_form_defect() -> Finding:
    """The plain doubling ``[[aA, bB], [aA, -bB]]`` is published as
    unitary for every ``a^2 + b^2 = 1``; it is not unless
    ``a^2 == b^2 == 1/2``."""
    a = sqrt_rational(Fraction(3, 4))
    b = RadicalScalar(Fraction(1, 2))
    eye = ExactMatrix.identity(2)
    try:
        block_pair(eye, eye, a, b, BlockForm.PLAIN)
    except BlockFormError as exc:
        defect = exc.defect
        reproduced = defect == RadicalScalar(Fraction(1, 2))
        witness = (f"a = sqrt(3)/2, b = 1/2 leaves row Gram defect "
                   f"a^2 - b^2 = {defect}")
    else:
        reproduced = False
        witness = "plain form unexpectedly accepted the coefficients"
    return Finding(
        ident="plain-block-form",
        claim="[[aA, bB], [aA, -bB]] is unitary whenever a^2 + b^2 = 1",
        actual="rows i and n+i have inner product a^2 - b^2, so the form "
               "is unitary only when a^2 == b^2 == 1/2; the balanced form "
               "[[aA, bB], [bA, -aB]] works for all a^2 + b^2 = 1",
        witness=witness,
        reproduced=reproduced,
    )


def published_third_basis() -> ExactMatrix:
    """The third unbiased basis as published (not orthonormal)."""
    half = Fraction(1, 2)
    return ExactMatrix([[1, 1, 1, 1],
                        [1, 1, -1, -1],
                        [1, -1, -1, -1],
                        [1, -1, 1, -1]]).scale(half)


def unbiased_basis_defect() -> Finding:
    """The published third basis of the unbiased triple in R^4 is not
    orthonormal; rows 1 and 3 have inner product -1/2."""
    report = check_unitary(published_third_basis())
    w = report.witness
    reproduced = (not report.passed and w is not None
                  and (w.i, w.j) == (1, 3) and w.residual == "-1/2")
    corrected = mub_r4()
    all_pass = all(
        check_unbiased_pair(corrected[i], corrected[j]).passed
        for i in range(3) for j in range(i + 1, 3))
    return Finding(
        ident="unbiased-third-basis",
        claim="the published sign pattern forms a third orthonormal basis "
              "unbiased to the other two",
        actual="rows 1 and 3 of the published pattern are not orthogonal; "
               "replacing it with the normalized Hadamard basis restores "
               "a pairwise unbiased triple"
               + ("" if all_pass else " (corrected triple FAILED)"),
        witness=f"check_unitary witness rows ({w.i}, {w.j}), "
                f"residual {w.residual}",
        reproduced=reproduced and all_pass,
    )


def inconsistent_table_defect() -> Finding:
    """The published free-form two-row table example violates both of
    its own identities."""
    top = (20, 24, 19, 25, 1, 7, 2, 6)
    bottom = (6, 2, 7, 1, 25, 14, 24, 20)
    try:
        TwoRowTable(top, bottom, 26)
    except TableValidationError as exc:
        reproduced = (exc.bad_columns == (6,)
                      and exc.row_sums == (104, 99)
                      and exc.expected_row_sum == 104)
        witness = str(exc)
    else:
        reproduced = False
        witness = "table unexpectedly validated"
    valid = make_two_row_table((20, 24, 19, 25), 26)
    rebuilt = "(" + ", ".join(str(v) for v in valid.top) + ")"
    return Finding(
        ident="free-form-table",
        claim="the published 8-column table satisfies the pair-sum and "
              "row-sum identities with m = 26",
        actual="column 6 pairs 7 + 14 = 21 != 26 and the row sums are "
               "104 vs 99; rebuilding from the first four weights with "
               f"m = 26 gives a valid table (top row {rebuilt})",
        witness=witness,
        reproduced=reproduced,
    )


def sparsity_count_defect() -> Finding:
    """The published nonzero count for the 5-dimensional hyperplane
    basis is 11; the construction it accompanies has 12."""
    from exactframes.hyperplane import build, predicted_sparsity

    basis = build(5)
    actual = basis.sparsity
    predicted = predicted_sparsity(5)
    reproduced = actual == 12 and predicted == 12
    return Finding(
        ident="hyperplane-5-sparsity",
        claim="the 5-dimensional combined basis has sparsity 11",
        actual="the top row has 5 nonzeros and the blocks contribute "
               "5 + 2, totalling 12; the size recursion agrees",
        witness=f"build(5).sparsity == {actual}, "
                f"predicted_sparsity(5) == {predicted}",
        reproduced=reproduced,
    )


def findings() -> list[Finding]:
    """All verified discrepancies, re-executed."""
    return [
        plain_block_form_defect(),
        unbiased_basis_defect(),
        inconsistent_table_defect(),
        sparsity_count_defect(),
    ]
