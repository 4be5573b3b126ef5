"""Exact rational vectors and dense matrices.

Scalars are :class:`fractions.Fraction`.  Vectors are plain tuples of
fractions.  :class:`Matrix` uses the column-action convention throughout the
package: ``M[i, j]`` is the coefficient of output basis vector ``i`` in the
image of input basis vector ``j``, so ``M.apply(v)`` is ``M @ v``.

    >>> A = Matrix.from_rows([[2, 0], [0, 3]])
    >>> solve_linear(A, vec(1, 1))
    (Fraction(1, 2), Fraction(1, 3))
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import InputError

Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"^([-−]?)(\d+)(?:/(\d+))?$")


def rational(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.  Floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InputError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise InputError(f"not an exact rational: {x!r}")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text.strip())
    if not m:
        raise InputError(f"malformed rational {text!r} (expected 'p' or 'p/q')")
    sign, p, q = m.groups()
    if q is not None and int(q) == 0:
        raise InputError(f"zero denominator in {text!r}")
    value = Fraction(int(p), int(q) if q is not None else 1)
    return -value if sign else value


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# -- vectors -----------------------------------------------------------------

def vec(*entries) -> Vector:
    return tuple(rational(e) for e in entries)


def zeros(n: int) -> Vector:
    return (ZERO,) * n


def unit(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def vadd(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise InputError(f"vector length mismatch: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise InputError(f"vector length mismatch: {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Sequence) -> Vector:
    c = rational(c)
    return tuple(c * a for a in v)


def vsum(vectors: Iterable[Sequence], n: int) -> Vector:
    acc = [ZERO] * n
    for v in vectors:
        for k, a in enumerate(v):
            if a:
                acc[k] += a
    return tuple(acc)


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise InputError(f"vector length mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), ZERO)


def is_zero_vector(v: Sequence) -> bool:
    return not any(v)


# -- matrices ----------------------------------------------------------------

class Matrix:
    """Immutable dense rational matrix (column-action convention)."""

    __slots__ = ("rows", "ncols", "_hash")

    def __init__(self, rows: Sequence[Sequence], ncols: Optional[int] = None):
        data = tuple(tuple(rational(e) for e in row) for row in rows)
        if ncols is None:
            if not data:
                raise InputError("cannot infer column count of an empty matrix")
            ncols = len(data[0])
        for r in data:
            if len(r) != ncols:
                raise InputError("ragged matrix rows")
        self.rows = data
        self.ncols = ncols
        self._hash = None

    @classmethod
    def from_rows(cls, rows, ncols=None) -> "Matrix":
        return cls(rows, ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: Optional[int] = None) -> "Matrix":
        columns = list(columns)
        if nrows is None:
            if not columns:
                raise InputError("cannot infer row count of an empty column list")
            nrows = len(columns[0])
        return cls([[columns[j][i] for j in range(len(columns))] for i in range(nrows)], len(columns))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([unit(n, i) for i in range(n)], n)

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([zeros(ncols) for _ in range(nrows)], ncols)

    @classmethod
    def diag(cls, *entries) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple:
        return (self.nrows, self.ncols)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list:
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.ncols)], self.nrows)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.ncols:
            raise InputError(f"cannot apply {self.nrows}x{self.ncols} matrix to length-{len(v)} vector")
        return tuple(sum((a * b for a, b in zip(row, v) if b), ZERO) for row in self.rows)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise InputError(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            return Matrix.from_columns([self.apply(c) for c in cols], self.nrows) if cols else Matrix.zero(self.nrows, 0)
        return self.apply(other)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise InputError(f"cannot add {self.shape} and {other.shape}")
        return Matrix([vadd(a, b) for a, b in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise InputError(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix([vsub(a, b) for a, b in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        return Matrix([vscale(c, r) for r in self.rows], self.ncols)

    def __rmul__(self, c) -> "Matrix":
        return self.scale(c)

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square():
            raise InputError("power of a non-square matrix")
        out = Matrix.identity(self.nrows)
        for _ in range(k):
            out = out @ self
        return out

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ncols, self.rows))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(format_rational(x) for x in r) + "]" for r in self.rows)
        return f"Matrix([{body}])"

    def tolist(self) -> list:
        return [list(r) for r in self.rows]


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    rows = [list(r) + [ZERO] * b.ncols for r in a.rows]
    rows += [[ZERO] * a.ncols + list(r) for r in b.rows]
    return Matrix(rows, a.ncols + b.ncols)


def direct_sum_vector(u: Sequence, v: Sequence) -> Vector:
    return tuple(u) + tuple(v)


# -- elimination -------------------------------------------------------------

def _rref(rows: list, ncols: int):
    """Reduced row echelon form in place; returns pivot columns.  First nonzero pivot."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r >= nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return pivots


def rank(A: Matrix) -> int:
    return len(_rref([list(r) for r in A.rows], A.ncols))


def solve_linear(A: Matrix, b: Sequence) -> Optional[Vector]:
    """Return some ``x`` with ``A @ x == b``, or ``None`` when the system is inconsistent."""
    if A.nrows != len(b):
        raise InputError(f"right-hand side has length {len(b)}, matrix has {A.nrows} rows")
    n = A.ncols
    aug = [list(row) + [rational(bi)] for row, bi in zip(A.rows, b)]
    pivots = _rref(aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = [ZERO] * n
    for r, c in enumerate(pivots):
        x[c] = aug[r][n]
    return tuple(x)


def kernel_basis(A: Matrix) -> list:
    """Basis of ``{x : A @ x = 0}``, one vector per free column."""
    n = A.ncols
    rows = [list(r) for r in A.rows]
    pivots = _rref(rows, n)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * n
        x[f] = ONE
        for r, c in enumerate(pivots):
            x[c] = -rows[r][f]
        basis.append(tuple(x))
    return basis


def invert(A: Matrix) -> Optional[Matrix]:
    if not A.is_square():
        raise InputError(f"cannot invert non-square {A.shape} matrix")
    n = A.nrows
    aug = [list(row) + list(unit(n, i)) for i, row in enumerate(A.rows)]
    pivots = _rref(aug, n)
    if len(pivots) < n:
        return None
    return Matrix([r[n:] for r in aug], n)


def in_span(columns: Sequence[Sequence], v: Sequence, dim: int) -> bool:
    if not columns:
        return is_zero_vector(v)
    return solve_linear(Matrix.from_columns(columns, dim), v) is not None


def det(M: Sequence[Sequence]) -> Fraction:
    """Determinant of a small square array by cofactor-free elimination."""
    rows = [list(map(rational, r)) for r in M]
    n = len(rows)
    if n == 0:
        return ONE
    out = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if p is None:
            return ZERO
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            out = -out
        piv = rows[c][c]
        out *= piv
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] / piv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return out
