"""Matrix serialization: exact JSON, exact CSV, LaTeX and float CSV.

The exact formats round-trip losslessly:

* ``exact-json``: ``{"rows": R, "cols": C, "entries": [[...]]}`` where
  each entry is a list of ``{"num": int, "den": int, "rad": int}`` terms
  (empty list for zero).  Serialized entries are canonical (squarefree
  radicands in ascending order, reduced coefficients), so serializing a
  parsed matrix reproduces the bytes exactly.
* ``csv``: one row per line, entries in the scalar text grammar
  separated by commas (the grammar contains no commas).

``latex`` emits a bmatrix for inspection and ``float-csv`` emits
nearest-double values with 17 significant digits; these two are one-way.
Deserialization accepts the two exact formats only, detects them by
leading character, and normalizes non-squarefree radicands (reporting
through the optional ``notes`` list rather than rejecting).
"""

from __future__ import annotations

import json
from fractions import Fraction

from exactframes import _kernel
from exactframes.errors import ParseError
from exactframes.matrices import ExactMatrix
from exactframes.radicals import RadicalScalar, format_scalar, parse_scalar

FORMATS = ("exact-json", "csv", "latex", "float-csv")


def serialize(a: ExactMatrix, fmt: str = "exact-json") -> str:
    """Render a matrix in one of the formats above."""
    if fmt == "exact-json":
        return _to_json(a)
    if fmt == "csv":
        return "\n".join(
            ",".join(format_scalar(a.entry(i, j)) for j in range(a.cols))
            for i in range(a.rows)) + "\n"
    if fmt == "latex":
        return _to_latex(a)
    if fmt == "float-csv":
        return "\n".join(
            ",".join("%.17g" % a.entry(i, j).to_float()
                     for j in range(a.cols))
            for i in range(a.rows)) + "\n"
    raise ParseError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def _to_json(a: ExactMatrix) -> str:
    entries = [[[{"num": n, "den": d, "rad": r} for r, n, d in a._data[i][j]]
                for j in range(a.cols)]
               for i in range(a.rows)]
    return json.dumps({"rows": a.rows, "cols": a.cols, "entries": entries},
                      separators=(",", ":"), sort_keys=True) + "\n"


def _latex_scalar(x: RadicalScalar) -> str:
    terms = x.terms
    if not terms:
        return "0"
    parts: list[str] = []
    for rad, coeff in terms:
        mag = abs(coeff)
        if parts:
            parts.append(" - " if coeff < 0 else " + ")
        elif coeff < 0:
            parts.append("-")
        if mag.denominator == 1:
            body = str(mag.numerator)
        else:
            body = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
        if rad == 1:
            parts.append(body)
        elif mag == 1:
            parts.append(rf"\sqrt{{{rad}}}")
        else:
            parts.append(body + rf"\sqrt{{{rad}}}")
    return "".join(parts)


def _to_latex(a: ExactMatrix) -> str:
    lines = [r"\begin{bmatrix}"]
    for i in range(a.rows):
        row = " & ".join(_latex_scalar(a.entry(i, j))
                         for j in range(a.cols))
        tail = r" \\" if i < a.rows - 1 else ""
        lines.append(row + tail)
    lines.append(r"\end{bmatrix}")
    return "\n".join(lines) + "\n"


def deserialize(text: str, notes: list[str] | None = None) -> ExactMatrix:
    """Parse an exact-json or csv matrix (detected by first character).

    Malformed input raises ParseError naming the offending location;
    non-squarefree radicands are normalized with a message appended to
    ``notes`` when given.
    """
    stripped = text.lstrip()
    if not stripped:
        raise ParseError("empty matrix text")
    if stripped[0] == "{":
        return _from_json(stripped, notes)
    return _from_csv(text, notes)


def _from_json(text: str, notes: list[str] | None) -> ExactMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    for key in ("rows", "cols", "entries"):
        if key not in doc:
            raise ParseError(f"missing key {key!r}")
    rows, cols, entries = doc["rows"], doc["cols"], doc["entries"]
    if not (isinstance(rows, int) and isinstance(cols, int)
            and rows >= 1 and cols >= 1):
        raise ParseError("'rows' and 'cols' must be positive integers")
    if not isinstance(entries, list) or len(entries) != rows:
        raise ParseError(f"'entries' must be a list of {rows} rows")
    data = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"entries[{i}] must be a list of {cols} entries")
        drow = []
        for j, entry in enumerate(row):
            drow.append(_entry_from_json(entry, i, j, notes))
        data.append(tuple(drow))
    return ExactMatrix._raw(rows, cols, tuple(data))


def _entry_from_json(entry: object, i: int, j: int,
                     notes: list[str] | None) -> tuple:
    where = f"entries[{i}][{j}]"
    if not isinstance(entry, list):
        raise ParseError(f"{where} must be a list of terms")
    total: tuple = ()
    for t, term in enumerate(entry):
        if (not isinstance(term, dict)
                or set(term) != {"num", "den", "rad"}):
            raise ParseError(
                f"{where} term {t} must be an object with keys "
                "num, den, rad")
        num, den, rad = term["num"], term["den"], term["rad"]
        if not all(isinstance(v, int) for v in (num, den, rad)):
            raise ParseError(f"{where} term {t} fields must be integers")
        if den == 0:
            raise ParseError(f"{where} term {t} has a zero denominator")
        if rad < 1:
            raise ParseError(f"{where} term {t} has radicand {rad}; "
                             "radicands must be positive")
        if notes is not None and not _kernel.is_squarefree(rad):
            outer, core = _kernel.squarefree_split(rad)
            notes.append(f"{where} term {t}: radicand {rad} is not "
                         f"squarefree; normalized to {outer}^2 * {core}")
        total = _kernel.add_terms(total, _kernel.make_terms(num, den, rad))
    return total


def _from_csv(text: str, notes: list[str] | None) -> ExactMatrix:
    rows = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        cells = line.split(",")
        if width is None:
            width = len(cells)
        elif len(cells) != width:
            raise ParseError(
                f"line {lineno} has {len(cells)} cells, expected {width}")
        row = []
        for colno, cell in enumerate(cells, start=1):
            try:
                row.append(parse_scalar(cell, notes))
            except ParseError as exc:
                raise ParseError(
                    f"line {lineno}, cell {colno}: {exc}") from None
        rows.append(row)
    if not rows:
        raise ParseError("no rows found in csv text")
    return ExactMatrix(rows)
