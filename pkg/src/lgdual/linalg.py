"""Exact integer and rational linear algebra.

Everything here works on Python ints and :class:`fractions.Fraction`; there is
no floating point anywhere in this module.  Lattice bases are lists of column
vectors and are canonicalized to column Hermite normal form: echelon shape
with strictly increasing pivot rows, positive pivots, and every entry of an
earlier column in a later pivot row reduced into ``[0, pivot)``.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import DimensionError, RankError

IntVector = tuple[int, ...]
RatVector = tuple[Fraction, ...]


def _as_int(x) -> int:
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise TypeError(f"non-integral entry {x}")
        return x.numerator
    return operator.index(x)


class IntMatrix:
    """Immutable dense matrix of arbitrary-precision integers."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        data = tuple(tuple(_as_int(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise DimensionError("matrix must be at least 1x1")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise DimensionError("ragged matrix rows")
        self._rows = data

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IntMatrix":
        if not columns:
            raise DimensionError("need at least one column")
        return cls(zip(*columns))

    @property
    def rows(self) -> tuple[IntVector, ...]:
        return self._rows

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return len(self._rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def row(self, i: int) -> IntVector:
        return self._rows[i]

    def column(self, j: int) -> IntVector:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> tuple[IntVector, ...]:
        return tuple(zip(*self._rows))

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(zip(*self._rows))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def apply(self, vector: Sequence) -> tuple:
        """Matrix-vector product; works for int or Fraction vectors."""
        if len(vector) != self.ncols:
            raise DimensionError(f"vector of length {len(vector)} vs {self.ncols} columns")
        return tuple(sum(a * x for a, x in zip(r, vector)) for r in self._rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self._rows])

    def __mul__(self, scalar: int) -> "IntMatrix":
        return IntMatrix([[scalar * x for x in r] for r in self._rows])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()})"


class SnfDecomposition(NamedTuple):
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def divisors(self) -> tuple[int, ...]:
        """Nonzero diagonal entries of D, in order."""
        n = min(self.D.shape)
        return tuple(d for d in (self.D.rows[i][i] for i in range(n)) if d != 0)


def _require_square(m: IntMatrix) -> None:
    if not m.is_square():
        raise DimensionError(f"square matrix required, got {m.nrows}x{m.ncols}")


def det(m: IntMatrix) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    _require_square(m)
    a = [list(r) for r in m.rows]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _minor(rows: tuple[IntVector, ...], i: int, j: int) -> IntMatrix:
    return IntMatrix([r[:j] + r[j + 1:] for k, r in enumerate(rows) if k != i])


def adjugate(m: IntMatrix) -> IntMatrix:
    """Classical adjoint: transpose of the cofactor matrix, so m @ adj(m) = det(m) I."""
    _require_square(m)
    n = m.nrows
    if n == 1:
        return IntMatrix([[1]])
    rows = m.rows
    cof = [[(-1) ** (i + j) * det(_minor(rows, i, j)) for j in range(n)] for i in range(n)]
    return IntMatrix(cof).T


def snf(m: IntMatrix) -> SnfDecomposition:
    """Smith normal form with unimodular transforms, U @ m @ V == D."""
    a = [list(r) for r in m.rows]
    nr, nc = m.shape
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    v = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    def add_row(dst, src, q):  # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(nr, nc)):
        while True:
            nonzero = [(abs(a[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if a[i][j]]
            if not nonzero:
                break
            _, i, j = min(nonzero)
            swap_rows(t, i)
            swap_cols(t, j)
            p = a[t][t]
            for i in range(t + 1, nr):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, nc):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            if any(a[i][t] for i in range(t + 1, nr)) or any(a[t][j] for j in range(t + 1, nc)):
                continue
            bad = next((i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return SnfDecomposition(IntMatrix(u), IntMatrix(a), IntMatrix(v))


def smith_divisors(m: IntMatrix) -> tuple[int, ...]:
    return snf(m).divisors


def rank(m: IntMatrix) -> int:
    _, pivots = _rref([[Fraction(x) for x in r] for r in m.rows])
    return len(pivots)


def _rref(a: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q, in place; returns (rows, pivot columns)."""
    nr = len(a)
    nc = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(nc):
        k = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if k is None:
            continue
        a[r], a[k] = a[k], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return a, pivots


def rat_solve(rows: Sequence[Sequence], rhs: Sequence) -> Optional[RatVector]:
    """Solve rows @ x = rhs over Q; free variables are set to zero.  None when inconsistent."""
    if len(rows) != len(rhs):
        raise DimensionError("right-hand side length does not match row count")
    ncols = len(rows[0])
    aug = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    red, pivots = _rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = red[i][ncols]
    return tuple(x)


def solve_exact(m: IntMatrix, rhs: Sequence) -> Optional[RatVector]:
    """Exact rational solution of m @ x = rhs, or None if the system is inconsistent."""
    return rat_solve(m.rows, rhs)


def rat_inverse(rows: Sequence[Sequence]) -> tuple[RatVector, ...]:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError("square matrix required")
    aug = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = _rref(aug)
    if pivots[:n] != list(range(n)):
        raise RankError("matrix is singular")
    return tuple(tuple(r[n:]) for r in red)


def _hnf_int(columns: Iterable[Sequence[int]], dim: int) -> tuple[IntVector, ...]:
    remaining = [list(c) for c in columns if any(c)]
    for c in remaining:
        if len(c) != dim:
            raise DimensionError(f"vector of length {len(c)} in ambient dimension {dim}")
    basis: list[list[int]] = []
    for r in range(dim):
        active = [c for c in remaining if c[r]]
        rest = [c for c in remaining if not c[r]]
        if not active:
            continue
        while len(active) > 1:
            active.sort(key=lambda c: abs(c[r]))
            p = active[0]
            survivors = [p]
            for c in active[1:]:
                q = c[r] // p[r]
                c = [x - q * y for x, y in zip(c, p)]
                if c[r]:
                    survivors.append(c)
                elif any(c):
                    rest.append(c)
            active = survivors
        p = active[0]
        if p[r] < 0:
            p = [-x for x in p]
        for k, b in enumerate(basis):
            q = b[r] // p[r]
            if q:
                basis[k] = [x - q * y for x, y in zip(b, p)]
        basis.append(p)
        remaining = rest
    return tuple(tuple(c) for c in basis)


def hnf_columns(columns: Iterable[Sequence[int]], dim: int) -> tuple[IntVector, ...]:
    """Canonical Z-basis (column HNF) of the integer lattice spanned by ``columns``.

    Works for any rank; the result has one column per unit of rank.
    """
    return _hnf_int((tuple(_as_int(x) for x in c) for c in columns), dim)


def hnf_basis(generators: Iterable[Sequence], ambient_dim: int) -> tuple[RatVector, ...]:
    """Canonical basis of the full-rank rational lattice generated by ``generators``.

    Two generating sets of the same lattice give identical output.  Raises
    RankError when the generators do not span Q^ambient_dim.
    """
    gens = [tuple(Fraction(x) for x in g) for g in generators]
    for g in gens:
        if len(g) != ambient_dim:
            raise DimensionError(f"generator of length {len(g)} in ambient dimension {ambient_dim}")
    den = lcm(1, *(x.denominator for g in gens for x in g))
    scaled = [[int(x * den) for x in g] for g in gens]
    cols = _hnf_int(scaled, ambient_dim)
    if len(cols) != ambient_dim:
        raise RankError(f"generators span rank {len(cols)} < {ambient_dim}")
    return tuple(tuple(Fraction(x, den) for x in c) for c in cols)


def integer_kernel(m: IntMatrix) -> tuple[IntVector, ...]:
    """Canonical Z-basis (as column vectors) of {x in Z^cols : m @ x = 0}; empty when trivial."""
    dec = snf(m)
    r = len(dec.divisors)
    cols = dec.V.columns()[r:]
    return hnf_columns(cols, m.ncols)


def vector_gcd(v: Iterable[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g
