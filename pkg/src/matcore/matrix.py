"""Exact dense matrices over the rationals.

Index convention: rows are stored as 0-based tuples, but every public
function or method that accepts or reports an index uses 1-based indices,
matching the a_ij notation of the reports.
"""
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Tuple, Union, Any

import numpy as np

from ..utils.errors import InvalidIndexError, NotSquareError, EmptyComplementError

Rational = Fraction
Scalar = Union[Fraction, int, float, str, Decimal, np.integer, np.floating]


def to_rational(value: Any) -> Fraction:
    """Convert a scalar to an exact Fraction.

    Strings are parsed as base-10 rationals ("0.048" -> 6/125, "1/3").
    Floats are converted to the exact value of their binary representation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (bool, np.bool_)):
        raise TypeError("booleans are not matrix entries")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, (float, np.floating)):
        return Fraction(float(value))
    if isinstance(value, (str, Decimal)):
        return Fraction(value.strip() if isinstance(value, str) else value)
    raise TypeError(f"Unsupported entry type: {type(value).__name__}")


@dataclass(frozen=True)
class IndexSet:
    """Strictly ascending, duplicate-free set of 1-based indices"""
    indices: Tuple[int, ...]

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.indices, self.indices[1:])):
            raise InvalidIndexError(f"Indices must be strictly ascending: {self.indices}")

    @classmethod
    def of(cls, indices: Iterable[int], n: int) -> "IndexSet":
        values = [int(i) for i in indices]
        if len(set(values)) != len(values):
            raise InvalidIndexError(f"Duplicate indices in {values}")
        for i in values:
            if not 1 <= i <= n:
                raise InvalidIndexError(f"Index {i} outside 1..{n}")
        return cls(tuple(sorted(values)))

    @classmethod
    def full(cls, n: int) -> "IndexSet":
        return cls(tuple(range(1, n + 1)))

    def complement(self, n: int) -> "IndexSet":
        members = set(self.indices)
        return IndexSet(tuple(i for i in range(1, n + 1) if i not in members))

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __bool__(self) -> bool:
        return bool(self.indices)

    def to_list(self) -> list[int]:
        return list(self.indices)


@dataclass(frozen=True)
class RationalMatrix:
    rows: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        widths = {len(row) for row in self.rows}
        if len(widths) > 1:
            raise NotSquareError(f"Ragged matrix rows: widths {sorted(widths)}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Scalar]]) -> "RationalMatrix":
        return cls(tuple(tuple(to_rational(x) for x in row) for row in rows))

    @classmethod
    def from_array(cls, array: np.ndarray) -> "RationalMatrix":
        """Build from a 2-d numpy array, converting every entry exactly"""
        array = np.asarray(array)
        if array.ndim != 2:
            raise NotSquareError(f"Expected a 2-d array, got shape {array.shape}")
        return cls.from_rows(array.tolist())

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(tuple(
            tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)
        ))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "RationalMatrix":
        return cls(tuple(tuple(Fraction(0) for _ in range(n_cols)) for _ in range(n_rows)))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> Tuple[int, int]:
        return self.n_rows, self.n_cols

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    @property
    def n(self) -> int:
        """Order of a square matrix"""
        if not self.is_square:
            raise NotSquareError(f"Matrix of shape {self.shape} is not square")
        return self.n_rows

    def entry(self, i: int, j: int) -> Fraction:
        if not (1 <= i <= self.n_rows and 1 <= j <= self.n_cols):
            raise InvalidIndexError(f"Entry ({i}, {j}) outside {self.n_rows}x{self.n_cols}")
        return self.rows[i - 1][j - 1]

    def diagonal(self) -> Tuple[Fraction, ...]:
        return tuple(self.rows[i][i] for i in range(self.n))

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(tuple(zip(*self.rows)) if self.rows else ())

    def apply(self, vector: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        """Matrix-vector product"""
        if len(vector) != self.n_cols:
            raise NotSquareError(f"Vector of length {len(vector)} does not match {self.shape}")
        return tuple(sum((a * x for a, x in zip(row, vector)), Fraction(0)) for row in self.rows)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.n_cols != other.n_rows:
            raise NotSquareError(f"Cannot multiply {self.shape} by {other.shape}")
        columns = list(zip(*other.rows))
        return RationalMatrix(tuple(
            tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in columns)
            for row in self.rows
        ))

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for row in self.rows for x in row)

    def is_tridiagonal(self) -> bool:
        return max(bandwidth(self)) <= 1

    def is_pentadiagonal(self) -> bool:
        return max(bandwidth(self)) <= 2

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.rows]

    def __str__(self) -> str:
        cells = self.to_strings()
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def _normalize(indices: Union[IndexSet, Iterable[int]], bound: int) -> IndexSet:
    if isinstance(indices, IndexSet):
        return IndexSet.of(indices.indices, bound)
    return IndexSet.of(indices, bound)


def submatrix(
    a: RationalMatrix,
    rows: Union[IndexSet, Iterable[int]],
    cols: Union[IndexSet, Iterable[int]]
) -> RationalMatrix:
    """A[rows | cols] with indices taken in ascending order"""
    row_set = _normalize(rows, a.n_rows)
    col_set = _normalize(cols, a.n_cols)
    if not row_set or not col_set:
        raise InvalidIndexError("Submatrix index sets must be nonempty")
    return RationalMatrix(tuple(
        tuple(a.rows[r - 1][c - 1] for c in col_set) for r in row_set
    ))


def principal_complement(a: RationalMatrix, alpha: Union[IndexSet, Iterable[int]]) -> RationalMatrix:
    """A(alpha) = A[alpha^c]; raises EmptyComplementError when alpha^c is empty"""
    n = a.n
    complement = _normalize(alpha, n).complement(n)
    if not complement:
        raise EmptyComplementError(f"Complement of {{1..{n}}} is empty")
    return submatrix(a, complement, complement)


def bandwidth(a: RationalMatrix) -> Tuple[int, int]:
    """(lower, upper): the largest i-j and j-i over nonzero entries"""
    lower = upper = 0
    for i, row in enumerate(a.rows):
        for j, x in enumerate(row):
            if x != 0:
                lower = max(lower, i - j)
                upper = max(upper, j - i)
    return lower, upper
