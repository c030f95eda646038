"""Immutable dense matrices over a :class:`~minrank.field.FieldSpec`."""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

from .errors import DimensionMismatch
from .field import FieldSpec, Q


class Matrix:
    """A dense ``rows x cols`` matrix with exact entries.

    Zero-dimensional shapes (``0 x k`` and ``k x 0``) are valid values.
    Instances are immutable and hashable.
    """

    __slots__ = ("field", "rows", "cols", "_data")

    def __init__(self, field: FieldSpec, rows: int, cols: int, data: Iterable[Iterable] = ()):
        data = tuple(tuple(field(x) for x in row) for row in data)
        if len(data) != rows or any(len(row) != cols for row in data):
            raise DimensionMismatch(f"entries do not form a {rows}x{cols} grid")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_data", data)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _raw(cls, field, rows, cols, data) -> "Matrix":
        # trusted constructor: data already tuple-of-tuples of field elements
        m = object.__new__(cls)
        object.__setattr__(m, "field", field)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "_data", data)
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: FieldSpec = Q, cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(field, len(rows), cols, rows)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return cls._raw(field, rows, cols, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls._raw(field, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index):
        i, j = index
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def col(self, j: int) -> tuple:
        return tuple(row[j] for row in self._data)

    def tolist(self) -> list:
        return [list(r) for r in self._data]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and self._data == other._data)

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self._data))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(x) for x in row) for row in self._data)
        return f"Matrix[{self.field}, {self.rows}x{self.cols}]({body})"

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(self.field, self.cols, self.rows,
                           tuple(zip(*self._data)) if self.rows else tuple(() for _ in range(self.cols)))

    def transpose(self) -> "Matrix":
        return self.T

    def _check_field(self, other: "Matrix"):
        if self.field != other.field:
            raise DimensionMismatch(f"field mismatch: {self.field} vs {other.field}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        f = self.field
        other_cols = [other.col(j) for j in range(other.cols)]
        if f.modulus is None:
            data = tuple(tuple(sum((a * b for a, b in zip(row, c)), f.zero) for c in other_cols)
                         for row in self._data)
        else:
            p = f.modulus
            data = tuple(tuple(sum(a * b for a, b in zip(row, c)) % p for c in other_cols)
                         for row in self._data)
        return Matrix._raw(f, self.rows, other.cols, data)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        add = self.field.add
        return Matrix._raw(self.field, self.rows, self.cols,
                           tuple(tuple(add(a, b) for a, b in zip(r, s)) for r, s in zip(self._data, other._data)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {self.shape} and {other.shape}")
        sub = self.field.sub
        return Matrix._raw(self.field, self.rows, self.cols,
                           tuple(tuple(sub(a, b) for a, b in zip(r, s)) for r, s in zip(self._data, other._data)))

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        mul = self.field.mul
        return Matrix._raw(self.field, self.rows, self.cols,
                           tuple(tuple(mul(c, a) for a in r) for r in self._data))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        rows, cols = list(rows), list(cols)
        return Matrix._raw(self.field, len(rows), len(cols),
                           tuple(tuple(self._data[i][j] for j in cols) for i in rows))

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        """Contiguous slice ``[r0:r1, c0:c1]``."""
        return Matrix._raw(self.field, r1 - r0, c1 - c0,
                           tuple(row[c0:c1] for row in self._data[r0:r1]))

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.rows != other.rows:
            raise DimensionMismatch(f"hstack needs equal row counts, got {self.rows} and {other.rows}")
        return Matrix._raw(self.field, self.rows, self.cols + other.cols,
                           tuple(a + b for a, b in zip(self._data, other._data)))

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.cols:
            raise DimensionMismatch(f"vstack needs equal column counts, got {self.cols} and {other.cols}")
        return Matrix._raw(self.field, self.rows + other.rows, self.cols, self._data + other._data)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._data for x in row)

    def is_square(self) -> bool:
        return self.rows == self.cols
