"""Exact rational scalars, matrices and linear solving.

Scalars are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator.  Matrices are small and dense.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

Scalar = Fraction
Vector = tuple  # tuple of Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class InputError(ValueError):
    """Raised on malformed or dimensionally inconsistent input."""


class PreconditionError(ValueError):
    """The input violates a hypothesis an operation depends on."""

    def __init__(self, message: str, residual=None):
        super().__init__(message)
        self.residual = residual


def scalar(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError(f"not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise InputError(f"not a rational number: {value!r}")


def parse_scalar(text: str) -> Fraction:
    s = text.strip()
    if not s:
        raise InputError("empty rational string")
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise InputError(f"not a rational string: {text!r}") from None
    if q == 0:
        raise InputError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def format_scalar(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def vector(values: Iterable) -> tuple:
    return tuple(scalar(v) for v in values)


def zero_vector(n: int) -> tuple:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> tuple:
    return tuple(ONE if k == i else ZERO for k in range(n))


def vadd(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Sequence) -> tuple:
    return tuple(c * a for a in v)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v) if a and b), ZERO)


def is_zero(v: Iterable) -> bool:
    return not any(v)


class Matrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable], cols: Optional[int] = None):
        rows = tuple(tuple(scalar(a) for a in row) for row in entries)
        if cols is None:
            if not rows:
                raise InputError("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        if any(len(row) != cols for row in rows):
            raise InputError("ragged matrix rows")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[ZERO] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([unit_vector(n, i) for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: Optional[int] = None) -> "Matrix":
        if not columns:
            if rows is None:
                raise InputError("cannot infer row count of an empty matrix")
            return cls([[] for _ in range(rows)], 0)
        return cls(zip(*columns), len(columns))

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.shape, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(format_scalar(a) for a in row) for row in self.entries)
        return f"Matrix([{body}])"

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.entries), self.rows) if self.cols else Matrix.zeros(0, self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix((vadd(a, b) for a, b in zip(self.entries, other.entries)), self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix((vsub(a, b) for a, b in zip(self.entries, other.entries)), self.cols)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = scalar(c)
        return Matrix((vscale(c, row) for row in self.entries), self.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.shape} by {other.shape}")
        other_cols = other.columns()
        return Matrix(([dot(row, col) for col in other_cols] for row in self.entries), other.cols)

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise InputError(f"vector of length {len(v)} for matrix with {self.cols} columns")
        return tuple(dot(row, v) for row in self.entries)

    def trace(self) -> Fraction:
        return sum((self.entries[i][i] for i in range(min(self.shape))), ZERO)

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.entries)

    def _same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise InputError(f"shape mismatch {self.shape} vs {other.shape}")


def rref(m: Matrix) -> tuple:
    """Reduced row echelon form.

    Pivots are chosen as the first non-zero entry scanning columns left to
    right and rows top to bottom; no scaling heuristics.  Returns
    ``(rows, pivot_columns)`` where ``rows`` is a list of lists.
    """
    a = [list(row) for row in m.entries]
    pivots = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            f = a[i][c]
            if i != r and f:
                ar = a[r]
                a[i] = [x - f * y for x, y in zip(a[i], ar)]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix) -> list:
    """Null-space basis from the free columns of the RREF, in column order."""
    a, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[free] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][free]
        basis.append(tuple(v))
    return basis


def solve_linear(m: Matrix, rhs: Sequence) -> Optional[tuple]:
    """Solve ``m x = rhs`` exactly, or return None when inconsistent.

    Free variables are set to zero.
    """
    if len(rhs) != m.rows:
        raise InputError(f"rhs has {len(rhs)} entries, matrix has {m.rows} rows")
    aug = Matrix((row + (scalar(b),) for row, b in zip(m.entries, rhs)), m.cols + 1)
    a, pivots = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = a[r][m.cols]
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise InputError("inverse of a non-square matrix")
    n = m.rows
    aug = Matrix((row + unit_vector(n, i) for i, row in enumerate(m.entries)), 2 * n)
    a, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or (len(pivots) > n and pivots[n] < n):
        raise InputError("matrix is singular")
    return Matrix((row[n:] for row in a), n)


class EchelonBasis:
    """Incrementally maintained echelon basis of a growing span."""

    def __init__(self, dim: int):
        self.dim = dim
        self._rows = []  # (pivot, normalized row)
        self.vectors = []  # the accepted input vectors, in order

    def __len__(self):
        return len(self._rows)

    def reduce(self, v: Sequence) -> list:
        w = list(v)
        for p, row in self._rows:
            c = w[p]
            if c:
                w = [a - c * b for a, b in zip(w, row)]
        return w

    def add(self, v: Sequence) -> bool:
        """Insert v; return True if it enlarged the span."""
        w = self.reduce(v)
        p = next((i for i, a in enumerate(w) if a), None)
        if p is None:
            return False
        inv = 1 / Fraction(w[p])
        self._rows.append((p, [a * inv for a in w]))
        self.vectors.append(tuple(v))
        return True

    def __contains__(self, v) -> bool:
        return not any(self.reduce(v))


def span_basis(vectors: Iterable[Sequence], dim: int) -> list:
    """Row-reduced basis of the span of ``vectors`` (possibly empty)."""
    vs = [tuple(v) for v in vectors]
    if not vs:
        return []
    a, pivots = rref(Matrix(vs, dim))
    return [tuple(a[i]) for i in range(len(pivots))]


def in_span(basis: Sequence[Sequence], v: Sequence) -> bool:
    if is_zero(v):
        return True
    if not basis:
        return False
    return solve_linear(Matrix.from_columns(basis), v) is not None


def coordinates(basis: Sequence[Sequence], v: Sequence) -> Optional[tuple]:
    """Coordinates of ``v`` in ``basis`` (columns), None if outside the span."""
    return solve_linear(Matrix.from_columns(basis, rows=len(v)), v)
