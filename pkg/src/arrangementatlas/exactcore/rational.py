from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
import math
from typing import Iterable, Optional, Sequence

from arrangementatlas.errors import ArrangementError


Rational = Fraction


def to_rational(value: object) -> Fraction:
    """
    Parse an integer, `Fraction` or string (`"p/q"`, `"-3"`, `"2.5"`) into a canonical Fraction.

    Floats are rejected: coordinates must be exact.
    """

    if isinstance(value, bool):
        raise ArrangementError(f"Not a rational number: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise ArrangementError(f"Not a rational number: {value!r}") from None
    raise ArrangementError(f"Not a rational number: {value!r} ({type(value).__name__})")


def format_rational(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), 0)


def primitive_integer_vector(vector: Sequence[Fraction | int]) -> tuple[int, ...]:
    """Positive multiple of `vector` with coprime integer entries (zero stays zero)."""

    values = [Fraction(x) for x in vector]
    denominator = reduce(math.lcm, (x.denominator for x in values), 1)
    scaled = [int(x * denominator) for x in values]
    content = reduce(math.gcd, scaled, 0)
    if content == 0:
        return tuple(scaled)
    return tuple(x // content for x in scaled)


@dataclass(frozen=True)
class QMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"Negative matrix shape: {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"Entry count {len(self.entries)} does not match shape {self.rows}x{self.cols}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]], *, cols: Optional[int] = None) -> "QMatrix":
        width = len(rows[0]) if rows else (cols or 0)
        entries: list[Fraction] = []
        for row in rows:
            if len(row) != width:
                raise ArrangementError(f"Ragged matrix: expected {width} entries, got {len(row)}")
            entries.extend(to_rational(x) for x in row)
        return cls(len(rows), width, tuple(entries))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[object]], *, rows: int) -> "QMatrix":
        if not columns:
            return cls(rows, 0, ())
        return cls.from_rows(columns).transpose()

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, tuple(Fraction(0) for _ in range(rows * cols)))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "QMatrix":
        return QMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError(f"Shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        other_cols = other.columns()
        return QMatrix(
            self.rows,
            other.cols,
            tuple(dot(self.row(i), other_cols[j]) for i in range(self.rows) for j in range(other.cols)),
        )

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)


@dataclass(frozen=True)
class RowReduction:
    rank: int
    rref: QMatrix
    pivot_columns: tuple[int, ...]


def _rref_rows(rows: list[list[Fraction]], cols: int) -> tuple[list[list[Fraction]], list[int]]:
    pivots: list[int] = []
    pivot_row = 0
    n_rows = len(rows)
    for col in range(cols):
        if pivot_row == n_rows:
            break
        # Least-index pivot keeps the result reproducible.
        source = next((r for r in range(pivot_row, n_rows) if rows[r][col] != 0), None)
        if source is None:
            continue
        rows[pivot_row], rows[source] = rows[source], rows[pivot_row]
        lead = rows[pivot_row][col]
        if lead != 1:
            rows[pivot_row] = [x / lead for x in rows[pivot_row]]
        pivot = rows[pivot_row]
        for r in range(n_rows):
            if r == pivot_row:
                continue
            factor = rows[r][col]
            if factor != 0:
                rows[r] = [a - factor * b for a, b in zip(rows[r], pivot)]
        pivots.append(col)
        pivot_row += 1
    return rows, pivots


def row_reduce(m: QMatrix) -> RowReduction:
    """Reduced row-echelon form over the rationals."""

    rows, pivots = _rref_rows(m.to_rows(), m.cols)
    entries = tuple(x for row in rows for x in row)
    return RowReduction(rank=len(pivots), rref=QMatrix(m.rows, m.cols, entries), pivot_columns=tuple(pivots))


def rank(vectors: Iterable[Sequence[object]]) -> int:
    rows = [[to_rational(x) for x in v] for v in vectors]
    if not rows:
        return 0
    _, pivots = _rref_rows(rows, len(rows[0]))
    return len(pivots)


def kernel_basis(m: QMatrix) -> QMatrix:
    """
    Basis of the right null space, one basis vector per column.

    Vector `f` has a 1 in the f-th free column and zeros in the other free columns.
    """

    reduction = row_reduce(m)
    pivot_set = set(reduction.pivot_columns)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis: list[list[Fraction]] = []
    for f in free:
        vector = [Fraction(0)] * m.cols
        vector[f] = Fraction(1)
        for i, p in enumerate(reduction.pivot_columns):
            vector[p] = -reduction.rref[i, f]
        basis.append(vector)
    return QMatrix.from_columns(basis, rows=m.cols)


def solve(m: QMatrix, b: Sequence[object]) -> Optional[tuple[Fraction, ...]]:
    """One solution of `m x = b` (free variables set to zero), or None if inconsistent."""

    if len(b) != m.rows:
        raise ValueError(f"Right-hand side has {len(b)} entries, matrix has {m.rows} rows")
    augmented = [row + [to_rational(v)] for row, v in zip(m.to_rows(), b)]
    rows, pivots = _rref_rows(augmented, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    solution = [Fraction(0)] * m.cols
    for i, p in enumerate(pivots):
        solution[p] = rows[i][m.cols]
    return tuple(solution)


def integer_kernel_basis(rows: Sequence[Sequence[object]], cols: int) -> list[tuple[int, ...]]:
    """`kernel_basis` with each basis vector scaled to a primitive integer vector."""

    if not rows:
        return [tuple(int(i == j) for i in range(cols)) for j in range(cols)]
    basis = kernel_basis(QMatrix.from_rows(rows))
    return [primitive_integer_vector(column) for column in basis.columns()]
