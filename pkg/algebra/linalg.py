"""Exact rational linear algebra.

Implements:
- QMatrix / QVector value types over fractions.Fraction
- Reduced row echelon form, rank, nullspace and column-span membership
- The plain-text matrix format used by the fixtures

Entries are kept as tuples of Fraction; elimination works on numpy object
arrays so that row operations stay vectorised without ever leaving exact
arithmetic.
"""

import math
import re
from fractions import Fraction
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from errors import DimensionMismatchError, ParseError

Rational = Fraction
RationalLike = Union[int, str, Fraction]

_RATIONAL_TOKEN = re.compile(r'^[+-]?\d+(/\d+)?$')


def to_rational(value: RationalLike) -> Fraction:
    """Convert an int, Fraction or `p`/`p/q` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        token = value.strip()
        if not _RATIONAL_TOKEN.match(token):
            raise ValueError(f"not an exact rational: {value!r}")
        if '/' in token and int(token.split('/')[1]) == 0:
            raise ValueError(f"zero denominator: {value!r}")
        return Fraction(token)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def format_rational(value: Fraction) -> str:
    """`p` or `p/q` with q > 0."""
    return str(Fraction(value))


def primitive_entries(entries: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Scale to coprime integers with a positive first nonzero entry."""
    nonzero = [e for e in entries if e != 0]
    if not nonzero:
        return tuple(Fraction(0) for _ in entries)
    denominator_lcm = 1
    for e in nonzero:
        denominator_lcm = denominator_lcm * e.denominator // math.gcd(denominator_lcm, e.denominator)
    integers = [int(e * denominator_lcm) for e in entries]
    common = 0
    for n in integers:
        common = math.gcd(common, n)
    if nonzero[0] < 0:
        common = -common
    return tuple(Fraction(n // common) for n in integers)


class QVector:
    """Immutable exact rational vector."""

    __slots__ = ('_entries',)

    def __init__(self, entries: Iterable[RationalLike]):
        self._entries = tuple(to_rational(e) for e in entries)

    @classmethod
    def zeros(cls, length: int) -> 'QVector':
        return cls([0] * length)

    @classmethod
    def unit(cls, length: int, index: int) -> 'QVector':
        entries = [0] * length
        entries[index] = 1
        return cls(entries)

    @property
    def entries(self) -> Tuple[Fraction, ...]:
        return self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __getitem__(self, index: int) -> Fraction:
        return self._entries[index]

    def __iter__(self):
        return iter(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QVector):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        return f"QVector([{', '.join(format_rational(e) for e in self._entries)}])"

    def __add__(self, other: 'QVector') -> 'QVector':
        _check_same_length(self, other)
        return QVector(a + b for a, b in zip(self._entries, other._entries))

    def __sub__(self, other: 'QVector') -> 'QVector':
        _check_same_length(self, other)
        return QVector(a - b for a, b in zip(self._entries, other._entries))

    def scale(self, factor: RationalLike) -> 'QVector':
        factor = to_rational(factor)
        return QVector(factor * e for e in self._entries)

    def is_zero(self) -> bool:
        return all(e == 0 for e in self._entries)

    def primitive(self) -> 'QVector':
        """Integer-primitive copy with positive first nonzero entry."""
        return QVector(primitive_entries(self._entries))

    def to_array(self) -> np.ndarray:
        array = np.empty(len(self._entries), dtype=object)
        array[:] = list(self._entries)
        return array


def _check_same_length(a: QVector, b: QVector) -> None:
    if len(a) != len(b):
        raise DimensionMismatchError(f"vector lengths differ: {len(a)} != {len(b)}")


class QMatrix:
    """Immutable exact rational matrix stored row-major."""

    __slots__ = ('rows', 'cols', '_entries')

    def __init__(self, rows: int, cols: int, entries: Iterable[RationalLike]):
        values = tuple(to_rational(e) for e in entries)
        if rows < 0 or cols < 0:
            raise DimensionMismatchError(f"negative shape {rows}x{cols}")
        if len(values) != rows * cols:
            raise DimensionMismatchError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(values)}")
        self.rows = rows
        self.cols = cols
        self._entries = values

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]],
                  cols: Optional[int] = None) -> 'QMatrix':
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for index, row in enumerate(rows):
            if len(row) != cols:
                raise DimensionMismatchError(f"row {index} has {len(row)} entries, expected {cols}")
        return cls(len(rows), cols, [e for row in rows for e in row])

    @classmethod
    def from_columns(cls, columns: Sequence[QVector], rows: Optional[int] = None) -> 'QMatrix':
        """Matrix whose j-th column is columns[j]."""
        if rows is None:
            if not columns:
                raise DimensionMismatchError("row count needed for an empty column list")
            rows = len(columns[0])
        for index, column in enumerate(columns):
            if len(column) != rows:
                raise DimensionMismatchError(f"column {index} has length {len(column)}, expected {rows}")
        return cls(rows, len(columns), [columns[j][i] for i in range(rows) for j in range(len(columns))])

    @classmethod
    def from_array(cls, array: np.ndarray) -> 'QMatrix':
        rows, cols = array.shape
        return cls(rows, cols, [array[i, j] for i in range(rows) for j in range(cols)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'QMatrix':
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> 'QMatrix':
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> Tuple[Fraction, ...]:
        return self._entries

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
        return self._entries[i * self.cols + j]

    def row(self, i: int) -> QVector:
        return QVector(self._entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> QVector:
        return QVector(self._entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self) -> List[QVector]:
        return [self.row(i) for i in range(self.rows)]

    def column_list(self) -> List[QVector]:
        return [self.column(j) for j in range(self.cols)]

    def to_array(self) -> np.ndarray:
        array = np.empty((self.rows, self.cols), dtype=object)
        for i in range(self.rows):
            for j in range(self.cols):
                array[i, j] = self._entries[i * self.cols + j]
        return array

    def is_zero(self) -> bool:
        return all(e == 0 for e in self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __repr__(self) -> str:
        return f"QMatrix({self.rows}x{self.cols})"


def transpose(m: QMatrix) -> QMatrix:
    """Swap rows and columns."""
    return QMatrix(m.cols, m.rows, [m[i, j] for j in range(m.cols) for i in range(m.rows)])


def hstack(a: QMatrix, b: QMatrix) -> QMatrix:
    """Place b to the right of a.

    Raises:
        DimensionMismatchError: if the row counts differ
    """
    if a.rows != b.rows:
        raise DimensionMismatchError(f"cannot place {a.shape} beside {b.shape}")
    return QMatrix.from_rows([list(a.row(i)) + list(b.row(i)) for i in range(a.rows)], a.cols + b.cols)


def vstack(a: QMatrix, b: QMatrix) -> QMatrix:
    """Place b below a."""
    if a.cols != b.cols:
        raise DimensionMismatchError(f"cannot stack {a.shape} over {b.shape}")
    return QMatrix(a.rows + b.rows, a.cols, a.entries + b.entries)


def mat_mul(a: QMatrix, b: QMatrix) -> QMatrix:
    """Exact product a·b."""
    if a.cols != b.rows:
        raise DimensionMismatchError(f"cannot multiply {a.shape} by {b.shape}")
    if a.cols == 0:
        return QMatrix.zeros(a.rows, b.cols)
    product = a.to_array().dot(b.to_array())
    return QMatrix(a.rows, b.cols, [Fraction(product[i, j]) for i in range(a.rows) for j in range(b.cols)])


def mat_vec(a: QMatrix, v: QVector) -> QVector:
    """Exact product a·v.

    Args:
        a: Matrix with len(v) columns
        v: Vector to map

    Returns:
        Vector of length a.rows
    """
    if a.cols != len(v):
        raise DimensionMismatchError(f"cannot apply {a.shape} matrix to a vector of length {len(v)}")
    return QVector(sum((a[i, j] * v[j] for j in range(a.cols)), Fraction(0)) for i in range(a.rows))


def rref(m: QMatrix) -> Tuple[QMatrix, Tuple[int, ...], int]:
    """Gauss-Jordan elimination.

    Args:
        m: Matrix to reduce

    Returns:
        (reduced matrix, strictly increasing pivot columns, rank)
    """
    if m.rows == 0 or m.cols == 0:
        return m, (), 0
    work = m.to_array()
    pivots: List[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        candidates = [i for i in range(r, m.rows) if work[i, c] != 0]
        if not candidates:
            continue
        p = candidates[0]
        if p != r:
            work[[r, p]] = work[[p, r]]
        work[r] = work[r] / work[r, c]
        for i in range(m.rows):
            if i != r and work[i, c] != 0:
                work[i] = work[i] - work[i, c] * work[r]
        pivots.append(c)
        r += 1
    return QMatrix.from_array(work), tuple(pivots), r


def rank(m: QMatrix) -> int:
    """Number of pivots of rref(m)."""
    return rref(m)[2]


def free_columns(m: QMatrix) -> List[int]:
    """Non-pivot columns of rref(m), ascending."""
    _, pivots, _ = rref(m)
    pivot_set = set(pivots)
    return [c for c in range(m.cols) if c not in pivot_set]


def nullspace_basis(m: QMatrix) -> List[QVector]:
    """Kernel basis, one vector per free column in ascending order.

    Each vector is the free-variable unit assignment, cleared to an
    integer-primitive vector with positive first nonzero entry.
    """
    reduced, pivots, _ = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        entries = [Fraction(0)] * m.cols
        entries[free] = Fraction(1)
        for i, p in enumerate(pivots):
            entries[p] = -reduced[i, free]
        basis.append(QVector(entries).primitive())
    return basis


def in_column_span(basis: Sequence[QVector], v: QVector) -> Optional[QVector]:
    """Coefficients c with sum c_i basis_i = v, or None when v is outside the span."""
    for index, b in enumerate(basis):
        if len(b) != len(v):
            raise DimensionMismatchError(
                f"basis vector {index} has length {len(b)}, target has length {len(v)}")
    if not basis:
        return QVector([]) if v.is_zero() else None
    augmented = QMatrix.from_columns(list(basis) + [v], len(v))
    reduced, pivots, _ = rref(augmented)
    n = len(basis)
    if pivots and pivots[-1] == n:
        return None
    coefficients = [Fraction(0)] * n
    for i, p in enumerate(pivots):
        coefficients[p] = reduced[i, n]
    return QVector(coefficients)


def parse_matrix(text: str, path: Optional[Union[str, Path]] = None) -> QMatrix:
    """Parse the `rows cols` header plus one whitespace-separated row per line."""
    lines = [(number, line.strip()) for number, line in enumerate(text.splitlines(), start=1)]
    lines = [(number, line) for number, line in lines if line]
    if not lines:
        raise ParseError("empty matrix file", path)
    header_line, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(f"expected 'rows cols' header, got {header!r}", path, header_line)
    rows, cols = int(parts[0]), int(parts[1])
    body = lines[1:] if cols > 0 else []
    if cols == 0 and len(lines) > 1:
        raise ParseError("matrix with zero columns must not carry row lines", path, lines[1][0])
    if cols > 0 and len(body) != rows:
        where = body[rows][0] if len(body) > rows else (body[-1][0] if body else header_line)
        raise ParseError(f"expected {rows} rows, found {len(body)}", path, where)
    entries: List[Fraction] = []
    for number, line in body:
        tokens = line.split()
        if len(tokens) != cols:
            raise ParseError(f"expected {cols} entries, found {len(tokens)}", path, number)
        for token in tokens:
            try:
                entries.append(to_rational(token))
            except ValueError as exc:
                raise ParseError(str(exc), path, number) from exc
    return QMatrix(rows, cols, entries)


def format_matrix(m: QMatrix) -> str:
    """Inverse of parse_matrix; trailing newline included."""
    lines = [f"{m.rows} {m.cols}"]
    if m.cols > 0:
        for i in range(m.rows):
            lines.append(' '.join(format_rational(e) for e in m.row(i)))
    return '\n'.join(lines) + '\n'


def load_matrix(path: Union[str, Path]) -> QMatrix:
    """Read a matrix file.

    Args:
        path: File in the `rows cols` text format

    Returns:
        The parsed matrix; parse errors carry the path and line
    """
    path = Path(path)
    return parse_matrix(path.read_text(encoding='utf-8'), path)
