"""Exact linear algebra over the rationals.

Matrices are sparse maps from (row, column) to nonzero ``Fraction`` entries.
Echelonization clears denominators row by row and hands integer rows to the
kernel backend, so no rounding can occur anywhere in a verdict path.  The
reduced echelon form is canonical for the row space, which makes ranks,
pivot columns, and standard-monomial choices reproducible across runs and
backends.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping

from . import kernels

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class NotSquareError(ValueError):
    """Determinant requested for a non-square matrix."""


def _coerce(value) -> Fraction:
    return value if type(value) is Fraction else Fraction(value)


class RatMatrix:
    """Sparse rational matrix, treated as immutable once constructed."""

    __slots__ = ("rows", "cols", "entries", "_rowcache")

    def __init__(self, rows: int, cols: int, entries: Mapping | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        cleaned = {}
        if entries:
            for (i, j), value in entries.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise ValueError(
                        f"entry ({i}, {j}) outside a {rows}x{cols} matrix"
                    )
                q = _coerce(value)
                if q:
                    cleaned[(i, j)] = q
        self.rows = rows
        self.cols = cols
        self.entries = cleaned
        self._rowcache = None

    @classmethod
    def from_rows(cls, data: Iterable[Iterable]) -> "RatMatrix":
        """Build from dense row lists; all rows must have equal length."""
        rows = [list(r) for r in data]
        ncols = len(rows[0]) if rows else 0
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("rows have unequal lengths")
            for j, value in enumerate(row):
                q = _coerce(value)
                if q:
                    entries[(i, j)] = q
        return cls(len(rows), ncols, entries)

    @classmethod
    def from_row_dicts(cls, row_dicts: Iterable[Mapping], cols: int) -> "RatMatrix":
        entries = {}
        nrows = 0
        for i, row in enumerate(row_dicts):
            nrows = i + 1
            for j, value in row.items():
                q = _coerce(value)
                if q:
                    entries[(i, j)] = q
        m = cls.__new__(cls)
        m.rows = nrows
        m.cols = cols
        m.entries = entries
        m._rowcache = None
        return m

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, {(i, i): _ONE for i in range(n)})

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, {})

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries.get((i, j), _ZERO)

    def row_dicts(self) -> list:
        """Per-row {column: value} views; do not mutate the returned dicts."""
        cache = self._rowcache
        if cache is None:
            cache = [dict() for _ in range(self.rows)]
            for (i, j), value in self.entries.items():
                cache[i][j] = value
            self._rowcache = cache
        return cache

    def to_lists(self) -> list:
        out = [[_ZERO] * self.cols for _ in range(self.rows)]
        for (i, j), value in self.entries.items():
            out[i][j] = value
        return out

    def transpose(self) -> "RatMatrix":
        return RatMatrix(
            self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()}
        )

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        brows = other.row_dicts()
        entries = {}
        for i, arow in enumerate(self.row_dicts()):
            acc = {}
            for j, av in arow.items():
                for k, bv in brows[j].items():
                    acc[k] = acc.get(k, _ZERO) + av * bv
            for k, v in acc.items():
                if v:
                    entries[(i, k)] = v
        return RatMatrix(self.rows, other.cols, entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RatMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.entries.items())))

    def __repr__(self) -> str:
        return f"RatMatrix({self.rows}x{self.cols}, {len(self.entries)} nonzero)"


@dataclass(frozen=True)
class EchelonForm:
    """Canonical reduced echelon form of a matrix's row space."""

    matrix: RatMatrix
    pivot_columns: tuple
    rank: int

    def __post_init__(self):
        if self.rank != len(self.pivot_columns):
            raise ValueError("rank must equal the number of pivot columns")


def _integer_row(row: Mapping) -> dict:
    mult = lcm(*(v.denominator for v in row.values()))
    return {c: v.numerator * (mult // v.denominator) for c, v in row.items()}


def rref(m: RatMatrix) -> EchelonForm:
    """Reduced row echelon form with pivot entries equal to one."""
    int_rows = [_integer_row(r) for r in m.row_dicts() if r]
    pivot_rows, pivot_cols = kernels.rref_int(int_rows, m.cols)
    entries = {}
    for i, (row, pcol) in enumerate(zip(pivot_rows, pivot_cols)):
        lead = row[pcol]
        for c, v in row.items():
            entries[(i, c)] = Fraction(v, lead)
    reduced = RatMatrix.__new__(RatMatrix)
    reduced.rows = len(pivot_cols)
    reduced.cols = m.cols
    reduced.entries = entries
    reduced._rowcache = None
    return EchelonForm(reduced, tuple(pivot_cols), len(pivot_cols))


def rank(m: RatMatrix) -> int:
    return rref(m).rank


def kernel_basis(m: RatMatrix) -> list:
    """Basis vectors (length ``cols``) of the right null space, one per free
    column in increasing column order."""
    ech = rref(m)
    pivot_set = set(ech.pivot_columns)
    rows = ech.matrix.row_dicts()
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vec = [_ZERO] * m.cols
        vec[free] = _ONE
        for i, pcol in enumerate(ech.pivot_columns):
            coeff = rows[i].get(free)
            if coeff:
                vec[pcol] = -coeff
        basis.append(vec)
    return basis


def determinant(m: RatMatrix) -> Fraction:
    if m.rows != m.cols:
        raise NotSquareError(f"matrix is {m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return _ONE
    denom = 1
    dense = [[0] * n for _ in range(n)]
    for i, row in enumerate(m.row_dicts()):
        if not row:
            return _ZERO
        mult = lcm(*(v.denominator for v in row.values()))
        denom *= mult
        for c, v in row.items():
            dense[i][c] = v.numerator * (mult // v.denominator)
    return Fraction(kernels.det_bareiss(dense), denom)


def reduce_mod_echelon(ech: EchelonForm, vec: Mapping) -> dict:
    """Remainder of a coefficient vector modulo the echelon row space.

    The result is supported on non-pivot columns only; it vanishes exactly
    when the vector lies in the row space.
    """
    out = {c: v for c, v in vec.items() if v}
    rows = ech.matrix.row_dicts()
    for i, pcol in enumerate(ech.pivot_columns):
        coeff = out.get(pcol)
        if not coeff:
            continue
        for c, v in rows[i].items():
            w = out.get(c, _ZERO) - coeff * v
            if w:
                out[c] = w
            else:
                out.pop(c, None)
    return out
