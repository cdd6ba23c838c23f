"""
Square matrices with exact entries from any of the algebras in the project.

Entries are kept in a numpy object array; products are computed with explicit
loops so that only the entries' own arithmetic is used (no float coercion).
"""

from itertools import product
from typing import Callable, Sequence, Tuple

import numpy as np

from scalar import NotInvertible


def _zero_like(value):
    return value * 0


class AlgebraMatrix:
    """Immutable rows x cols matrix of exact entries."""

    __slots__ = ("_data", "zero")

    def __init__(self, rows, zero=None):
        if isinstance(rows, np.ndarray):
            data = rows
        else:
            # entries may themselves be iterable, so fill cell by cell
            rows = [list(row) for row in rows]
            data = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
            for i, row in enumerate(rows):
                for j, entry in enumerate(row):
                    data[i, j] = entry
        if data.ndim != 2:
            raise ValueError(f"Matrix data must be two-dimensional, got shape {data.shape}")
        self._data = data
        self.zero = _zero_like(data[0, 0]) if zero is None and data.size else zero

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------
    @classmethod
    def identity(cls, dimension: int, one, zero=None) -> "AlgebraMatrix":
        zero = _zero_like(one) if zero is None else zero
        data = np.empty((dimension, dimension), dtype=object)
        for i in range(dimension):
            for j in range(dimension):
                data[i, j] = one if i == j else zero
        return cls(data, zero)

    @classmethod
    def zeros(cls, rows: int, cols: int, zero) -> "AlgebraMatrix":
        data = np.empty((rows, cols), dtype=object)
        data.fill(zero)
        return cls(data, zero)

    @classmethod
    def diagonal(cls, values: Sequence, zero=None) -> "AlgebraMatrix":
        zero = _zero_like(values[0]) if zero is None else zero
        result = cls.zeros(len(values), len(values), zero)
        for i, value in enumerate(values):
            result._data[i, i] = value
        return result

    # ------------------------------------------------------------------
    # views
    # ------------------------------------------------------------------
    @property
    def shape(self) -> Tuple[int, int]:
        return self._data.shape

    @property
    def dimension(self) -> int:
        return self._data.shape[0]

    def __getitem__(self, index):
        return self._data[index]

    def entries(self):
        """(i, j, entry) for every nonzero entry, row-major."""
        rows, cols = self.shape
        for i in range(rows):
            for j in range(cols):
                if self._data[i, j]:
                    yield i, j, self._data[i, j]

    def rows(self):
        return [list(row) for row in self._data]

    def map(self, fn: Callable, zero=None) -> "AlgebraMatrix":
        data = np.empty(self.shape, dtype=object)
        for i, j in np.ndindex(*self.shape):
            data[i, j] = fn(self._data[i, j])
        return AlgebraMatrix(data, zero)

    def transpose(self) -> "AlgebraMatrix":
        return AlgebraMatrix(self._data.T.copy(), self.zero)

    def is_zero(self) -> bool:
        return not any(bool(entry) for entry in self._data.flat)

    def trace(self):
        total = self.zero
        for i in range(min(self.shape)):
            total = total + self._data[i, i]
        return total

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------
    def _check_shape(self, other: "AlgebraMatrix"):
        if self.shape != other.shape:
            raise ValueError(f"Shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        if not isinstance(other, AlgebraMatrix):
            return NotImplemented
        self._check_shape(other)
        return AlgebraMatrix(self._data + other._data)

    def __sub__(self, other):
        if not isinstance(other, AlgebraMatrix):
            return NotImplemented
        self._check_shape(other)
        data = np.empty(self.shape, dtype=object)
        for i, j in np.ndindex(*self.shape):
            data[i, j] = self._data[i, j] - other._data[i, j]
        return AlgebraMatrix(data)

    def __neg__(self):
        return self.map(lambda entry: -entry, self.zero)

    def __mul__(self, scalar):
        if isinstance(scalar, AlgebraMatrix):
            return NotImplemented
        return self.map(lambda entry: entry * scalar)

    def __rmul__(self, scalar):
        if isinstance(scalar, AlgebraMatrix):
            return NotImplemented
        return self.map(lambda entry: scalar * entry)

    def __matmul__(self, other):
        if not isinstance(other, AlgebraMatrix):
            return NotImplemented
        rows, inner = self.shape
        if inner != other.shape[0]:
            raise ValueError(f"Cannot multiply {self.shape} by {other.shape}")
        cols = other.shape[1]
        zero = self.zero * other.zero
        data = np.empty((rows, cols), dtype=object)
        for i in range(rows):
            for j in range(cols):
                total = None
                for k in range(inner):
                    left = self._data[i, k]
                    if not left:
                        continue
                    right = other._data[k, j]
                    if not right:
                        continue
                    term = left * right
                    total = term if total is None else total + term
                data[i, j] = zero if total is None else total
        return AlgebraMatrix(data, zero)

    def kron(self, other: "AlgebraMatrix") -> "AlgebraMatrix":
        """Kronecker product; entry ((i, k), (j, l)) is self[i, j] * other[k, l]."""
        r1, c1 = self.shape
        r2, c2 = other.shape
        zero = self.zero * other.zero
        data = np.empty((r1 * r2, c1 * c2), dtype=object)
        data.fill(zero)
        for i, j, left in self.entries():
            for k, l, right in other.entries():
                data[i * r2 + k, j * c2 + l] = left * right
        return AlgebraMatrix(data, zero)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = AlgebraMatrix.identity(self.dimension, self.zero + 1, self.zero)
        for _ in range(exponent):
            result = result @ self
        return result

    def inverse(self) -> "AlgebraMatrix":
        """Gauss-Jordan inverse; entries must come from a field (RatFunc or Cyclotomic)."""
        n = self.dimension
        if self.shape != (n, n):
            raise ValueError("Only square matrices are invertible")
        one = self.zero + 1
        work = [list(row) + [one if i == j else self.zero for j in range(n)]
                for i, row in enumerate(self._data)]
        for column in range(n):
            pivot = next((r for r in range(column, n) if work[r][column]), None)
            if pivot is None:
                raise NotInvertible("Matrix is singular")
            work[column], work[pivot] = work[pivot], work[column]
            scale = one / work[column][column]
            work[column] = [entry * scale for entry in work[column]]
            for r in range(n):
                if r != column and work[r][column]:
                    factor = work[r][column]
                    work[r] = [a - factor * b for a, b in zip(work[r], work[column])]
        return AlgebraMatrix([row[n:] for row in work], self.zero)

    def __eq__(self, other):
        if not isinstance(other, AlgebraMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return all(self._data[i, j] == other._data[i, j] for i, j in np.ndindex(*self.shape))

    __hash__ = None

    def __repr__(self):
        return f"AlgebraMatrix(shape={self.shape})"

    def __str__(self):
        """Row-major, one row per line, entries separated by ' ; '."""
        return "\n".join(" ; ".join(str(entry) for entry in row) for row in self._data)


# ----------------------------------------------------------------------
# legs of tensor-product spaces
# ----------------------------------------------------------------------
def _multi_indices(dims: Sequence[int]):
    return list(product(*(range(d) for d in dims)))


def embed_legs(matrix: AlgebraMatrix, legs: Sequence[int], dims: Sequence[int]) -> AlgebraMatrix:
    """
    matrix acting on the given legs (0-based, in the order its own factors are
    listed) of the space with factor dimensions dims, identity on the others.
    """
    sub_dims = [dims[leg] for leg in legs]
    expected = 1
    for d in sub_dims:
        expected *= d
    if matrix.shape != (expected, expected):
        raise ValueError(f"Matrix of shape {matrix.shape} does not act on legs {legs} of {dims}")
    indices = _multi_indices(dims)
    position = {index: k for k, index in enumerate(indices)}
    sub_indices = _multi_indices(sub_dims)
    sub_position = {index: k for k, index in enumerate(sub_indices)}
    total = len(indices)
    data = np.empty((total, total), dtype=object)
    data.fill(matrix.zero)
    for column, source in enumerate(indices):
        source_sub = sub_position[tuple(source[leg] for leg in legs)]
        for target_sub, target_values in enumerate(sub_indices):
            entry = matrix[target_sub, source_sub]
            if not entry:
                continue
            target = list(source)
            for leg, value in zip(legs, target_values):
                target[leg] = value
            data[position[tuple(target)], column] = entry
    return AlgebraMatrix(data, matrix.zero)


def flip_matrix(d1: int, d2: int, one, zero=None) -> AlgebraMatrix:
    """P: e_i (x) f_j -> f_j (x) e_i from V (x) W to W (x) V."""
    zero = _zero_like(one) if zero is None else zero
    result = AlgebraMatrix.zeros(d1 * d2, d1 * d2, zero)
    for i in range(d1):
        for j in range(d2):
            result._data[j * d1 + i, i * d2 + j] = one
    return result
