"""Exact rational matrices.

Small immutable matrices over :class:`fractions.Fraction`.  Empty shapes
(``0 x k`` and ``k x 0``) are ordinary values, so callers never special-case
zero-dimensional vector spaces.  Ranks are computed by fraction-free
(Bareiss) elimination on row-scaled integer copies; kernels and solutions go
through reduced row echelon form.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point entries are not allowed")
    return Fraction(x)


class Matrix:
    """An exact ``rows x cols`` matrix."""

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, data: Iterable[Iterable], rows: int | None = None, cols: int | None = None):
        body = tuple(tuple(_frac(x) for x in row) for row in data)
        if rows is None:
            rows = len(body)
        if cols is None:
            if not body:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(body[0])
        if len(body) != rows or any(len(r) != cols for r in body):
            raise ValueError(f"ragged or mis-shaped data for a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self._data = body
        self._hash = None

    # -- constructors --------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        return cls([[c[i] for c in columns] for i in range(rows)], rows, len(columns))

    @classmethod
    def hstack(cls, blocks: Sequence["Matrix"], rows: int | None = None) -> "Matrix":
        if not blocks:
            return cls.zeros(rows or 0, 0)
        r = blocks[0].rows
        if any(b.rows != r for b in blocks):
            raise ValueError("hstack: row counts differ")
        data = [sum((b._data[i] for b in blocks), ()) for i in range(r)]
        return cls(data, r, sum(b.cols for b in blocks))

    @classmethod
    def vstack(cls, blocks: Sequence["Matrix"], cols: int | None = None) -> "Matrix":
        if not blocks:
            return cls.zeros(0, cols or 0)
        c = blocks[0].cols
        if any(b.cols != c for b in blocks):
            raise ValueError("vstack: column counts differ")
        return cls([row for b in blocks for row in b._data], sum(b.rows for b in blocks), c)

    @classmethod
    def block_diag(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = [[Fraction(0)] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                out[r0 + i][c0:c0 + b.cols] = b._data[i]
            r0 += b.rows
            c0 += b.cols
        return cls(out, rows, cols)

    # -- basic protocol ------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    # -- arithmetic ----------------------------------------------------------

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols_b = list(zip(*other._data)) if other.rows else [()] * other.cols
        data = [[sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols_b]
                for r in self._data]
        return Matrix(data, self.rows, other.cols)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
                      self.rows, self.cols)

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self._data], self.rows, self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = _frac(c)
        return Matrix([[c * a for a in r] for r in self._data], self.rows, self.cols)

    @property
    def T(self) -> "Matrix":
        return Matrix([[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)],
                      self.cols, self.rows)

    def is_zero(self) -> bool:
        return all(not a for r in self._data for a in r)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for r in self._data for a in r)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix([[self._data[i][j] for j in cols] for i in rows], len(rows), len(cols))

    # -- elimination ---------------------------------------------------------

    def rank(self) -> int:
        """Rank by fraction-free Gaussian elimination."""
        m = []
        for r in self._data:
            den = lcm(*(a.denominator for a in r)) if r else 1
            m.append([int(a * den) for a in r])
        rows, cols = self.rows, self.cols
        rank = 0
        prev = 1
        for c in range(cols):
            piv = next((i for i in range(rank, rows) if m[i][c]), None)
            if piv is None:
                continue
            m[rank], m[piv] = m[piv], m[rank]
            p = m[rank][c]
            for i in range(rank + 1, rows):
                mi = m[i]
                f = mi[c]
                mr = m[rank]
                for j in range(c, cols):
                    mi[j] = (p * mi[j] - f * mr[j]) // prev
            prev = p
            rank += 1
            if rank == rows:
                break
        return rank

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and the pivot columns."""
        m = [list(r) for r in self._data]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            piv = next((i for i in range(r, self.rows) if m[i][c]), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = 1 / m[r][c]
            m[r] = [a * inv for a in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return Matrix(m, self.rows, self.cols), tuple(pivots)

    def nullspace(self) -> "Matrix":
        """Basis of ``{x : self @ x = 0}`` as the columns of a ``cols x k`` matrix."""
        red, pivots = self.rref()
        free = [j for j in range(self.cols) if j not in set(pivots)]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)
            for r, p in enumerate(pivots):
                v[p] = -red[r, f]
            basis.append(v)
        return Matrix.from_columns(basis, self.cols)

    def left_nullspace(self) -> "Matrix":
        """Basis of ``{y : y @ self = 0}`` as the rows of a ``k x rows`` matrix."""
        return self.T.nullspace().T

    def column_basis(self) -> "Matrix":
        """Columns of ``self`` forming a basis of its column space."""
        _, pivots = self.rref()
        return self.submatrix(range(self.rows), pivots)

    def solve(self, rhs: "Matrix") -> "Matrix":
        """Some ``X`` with ``self @ X == rhs``; raises ``ValueError`` if none exists."""
        if rhs.rows != self.rows:
            raise ValueError("solve: row counts differ")
        aug = Matrix.hstack([self, rhs]) if self.cols or rhs.cols else Matrix.zeros(self.rows, 0)
        red, pivots = aug.rref()
        if any(p >= self.cols for p in pivots):
            raise ValueError("linear system has no solution")
        x = [[Fraction(0)] * rhs.cols for _ in range(self.cols)]
        for r, p in enumerate(pivots):
            x[p] = list(red.row(r)[self.cols:])
        return Matrix(x, self.cols, rhs.cols)

    def left_inverse(self) -> "Matrix":
        """``L`` with ``L @ self == I``; requires full column rank."""
        return self.T.solve(Matrix.identity(self.cols)).T

    def right_inverse(self) -> "Matrix":
        """``R`` with ``self @ R == I``; requires full row rank."""
        return self.solve(Matrix.identity(self.rows))

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        return self.solve(Matrix.identity(self.rows))


def fraction_str(x: Fraction) -> str:
    """Serialize as ``"p/q"`` (denominator always written)."""
    return f"{x.numerator}/{x.denominator}"


def matrix_to_strings(m: Matrix) -> list[list[str]]:
    return [[fraction_str(a) for a in r] for r in m.tolist()]


def matrix_from_strings(rows: Sequence[Sequence], nrows: int, ncols: int) -> Matrix:
    return Matrix([[Fraction(str(a)) for a in r] for r in rows], nrows, ncols)
