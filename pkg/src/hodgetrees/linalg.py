"""Exact integer linear algebra.

Everything here works on Python ints (and ``Fraction`` where a rational
solve is unavoidable), so there is no overflow and no rounding.  Matrices
are small dense row-major tuples; the complexes this package cares about
have a few dozen cells per dimension at most.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    nrows: int
    ncols: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows:
            raise ValueError(f"expected {self.nrows} rows, got {len(self.rows)}")
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError(f"row of length {len(r)} in matrix with {self.ncols} columns")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: int | None = None) -> "IntMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        return cls(len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, cols: Iterable[Sequence[int]], nrows: int) -> "IntMatrix":
        cols = [tuple(c) for c in cols]
        return cls.from_rows(zip(*cols) if cols else [() for _ in range(nrows)], len(cols))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(nrows, ncols, tuple((0,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(self.ncols, self.nrows, tuple(zip(*self.rows)) if self.nrows else
                         tuple(() for _ in range(self.ncols)))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def take_columns(self, idx: Sequence[int]) -> "IntMatrix":
        return IntMatrix(self.nrows, len(idx), tuple(tuple(r[j] for j in idx) for r in self.rows))

    def take_rows(self, idx: Sequence[int]) -> "IntMatrix":
        return IntMatrix(len(idx), self.ncols, tuple(self.rows[i] for i in idx))

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if other.nrows != self.nrows:
            raise ValueError("row counts differ")
        return IntMatrix(self.nrows, self.ncols + other.ncols,
                         tuple(a + b for a, b in zip(self.rows, other.rows)))

    def vstack(self, other: "IntMatrix") -> "IntMatrix":
        if other.ncols != self.ncols:
            raise ValueError("column counts differ")
        return IntMatrix(self.nrows + other.nrows, self.ncols, self.rows + other.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        return IntMatrix(self.nrows, other.ncols, tuple(
            tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows))

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product; works for int or Fraction entries in ``v``."""
        if len(v) != self.ncols:
            raise ValueError(f"vector of length {len(v)} for matrix with {self.ncols} columns")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.rows)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors of an integer matrix.

    ``diag`` holds the nonzero factors d1 | d2 | ...; when transforms were
    requested, ``left @ M @ right`` is the diagonal matrix carrying them.
    """
    diag: tuple[int, ...]
    shape: tuple[int, int]
    left: IntMatrix | None = field(default=None, compare=False)
    right: IntMatrix | None = field(default=None, compare=False)

    @property
    def rank(self) -> int:
        return len(self.diag)

    def diagonal_matrix(self) -> IntMatrix:
        m, n = self.shape
        return IntMatrix.from_rows(
            [[self.diag[i] if i == j and i < len(self.diag) else 0 for j in range(n)]
             for i in range(m)], n)


def content(v: Iterable[int]) -> int:
    """gcd of the entries; 0 for the zero vector."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide by the content and make the first nonzero entry positive."""
    g = content(v)
    if g == 0:
        return tuple(v)
    first = next(x for x in v if x)
    if first < 0:
        g = -g
    return tuple(x // g for x in v)


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ValueError(f"length mismatch {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def rank(M: IntMatrix) -> int:
    """Rank over the rationals (integer elimination with row content division)."""
    A = [list(r) for r in M.rows]
    m, n = M.shape
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        pr = A[r]
        for i in range(r + 1, m):
            a = A[i][c]
            if a:
                row = [pr[c] * x - a * y for x, y in zip(A[i], pr)]
                g = content(row)
                A[i] = [x // g for x in row] if g > 1 else row
        r += 1
        if r == m:
            break
    return r


def det(M: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    n, n2 = M.shape
    if n != n2:
        raise ValueError(f"determinant of non-square {M.shape} matrix")
    if n == 0:
        return 1
    A = [list(r) for r in M.rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            p = next((i for i in range(k + 1, n) if A[i][k]), None)
            if p is None:
                return 0
            A[k], A[p] = A[p], A[k]
            sign = -sign
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            Ai, Ak = A[i], A[k]
            for j in range(k + 1, n):
                Ai[j] = (Ai[j] * akk - aik * Ak[j]) // prev
            Ai[k] = 0
        prev = akk
    return sign * A[n - 1][n - 1]


def gram_det(M: IntMatrix) -> int:
    """det(M M^t); equals the sum of squared maximal minors when rows <= cols."""
    return det(M @ M.T)


def cofactor_kernel_vector(A: IntMatrix) -> tuple[int, ...]:
    """Signed maximal minors of an n x (n+1) matrix.

    Entry j is (-1)**j times the determinant of A with column j deleted.
    The result lies in ker A and vanishes exactly when rank A < n.
    """
    n, m = A.shape
    if m != n + 1:
        raise ValueError(f"expected an n x (n+1) matrix, got {A.shape}")
    cols = list(range(m))
    return tuple((-1) ** j * det(A.take_columns(cols[:j] + cols[j + 1:])) for j in range(m))


def _echelon_rows(A: list[list[int]], ncols: int) -> int:
    """In-place integer row echelon form on the first ``ncols`` columns.

    Unimodular row operations only; pivots end positive and entries above
    each pivot are reduced into [0, pivot).  Returns the number of pivots,
    which equals the number of leading rows with a nonzero prefix.
    """
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, len(A)) if A[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: (abs(A[i][c]), i))
            A[r], A[p] = A[p], A[r]
            piv = A[r]
            clean = True
            for i in range(r + 1, len(A)):
                if A[i][c]:
                    q = A[i][c] // piv[c]
                    A[i] = [x - q * y for x, y in zip(A[i], piv)]
                    if A[i][c]:
                        clean = False
            if clean:
                break
        if r < len(A) and A[r][c]:
            if A[r][c] < 0:
                A[r] = [-x for x in A[r]]
            piv = A[r]
            for i in range(r):
                q = A[i][c] // piv[c]
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], piv)]
            r += 1
    return r


def hermite_basis(vectors: Iterable[Sequence[int]], length: int) -> list[tuple[int, ...]]:
    """Row Hermite normal form of the lattice spanned by ``vectors``.

    The returned rows are a canonical Z-basis of the lattice: it depends
    only on the lattice, not on the generators handed in.
    """
    A = [list(v) for v in vectors]
    for v in A:
        if len(v) != length:
            raise ValueError(f"vector of length {len(v)}, expected {length}")
    r = _echelon_rows(A, length)
    return [tuple(v) for v in A[:r]]


def kernel_basis(M: IntMatrix) -> list[tuple[int, ...]]:
    """Canonical Z-basis of the integer kernel of ``M``.

    Column-style reduction: row-reduce [M^t | I]; identity parts of rows
    whose M^t part vanished span ker M over Z.  The result is then put in
    Hermite form, so every vector is primitive with a positive leading
    entry and identical inputs give identical bases.
    """
    m, n = M.shape
    if m == 0:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    A = [list(M.column(j)) + [int(i == j) for i in range(n)] for j in range(n)]
    r = _echelon_rows(A, m)
    return hermite_basis((row[m:] for row in A[r:]), n)


def image_basis(M: IntMatrix) -> list[tuple[int, ...]]:
    """Hermite basis of the lattice spanned by the columns of ``M``."""
    return hermite_basis(M.columns(), M.nrows)


def independent_columns(M: IntMatrix) -> list[int]:
    """Greedy leftmost maximal set of rationally independent columns."""
    chosen: list[int] = []
    for j in range(M.ncols):
        if rank(M.take_columns(chosen + [j])) == len(chosen) + 1:
            chosen.append(j)
    return chosen


def solve_in_basis(basis: Sequence[Sequence[int]], v: Sequence) -> tuple[Fraction, ...] | None:
    """Rational coordinates c with sum c_k basis_k == v, or None if v is not in the span.

    ``basis`` must be linearly independent.
    """
    k = len(basis)
    n = len(v)
    # augmented system B^t c = v, n equations in k unknowns
    A = [[Fraction(basis[j][i]) for j in range(k)] + [Fraction(v[i])] for i in range(n)]
    pivots = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, n) if A[i][c]), None)
        if p is None:
            raise ValueError("basis vectors are linearly dependent")
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(n):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    if any(A[i][k] for i in range(r, n)):
        return None
    return tuple(A[i][k] for i in range(k))


def lattice_coordinates(basis: Sequence[Sequence[int]], v: Sequence[int]) -> tuple[int, ...]:
    """Integer coordinates of ``v`` in a lattice basis; raises if v is not in the lattice."""
    coords = solve_in_basis(basis, v)
    if coords is None:
        raise ValueError("vector is not in the span of the basis")
    if any(c.denominator != 1 for c in coords):
        raise ValueError("vector is in the rational span but not in the lattice")
    return tuple(int(c) for c in coords)


def coordinate_matrix(basis: Sequence[Sequence[int]], M: IntMatrix) -> IntMatrix:
    """Columns of ``M`` written in the lattice basis ``basis``: the matrix [M]_Z."""
    cols = [lattice_coordinates(basis, c) for c in M.columns()]
    return IntMatrix.from_columns(cols, len(basis))


def smith_normal_form(M: IntMatrix, transforms: bool = False) -> SmithForm:
    """Smith normal form by repeated gcd reduction.

    Pivot choice is the smallest nonzero magnitude in the active block,
    ties going to the leftmost column, then the top row.
    """
    m, n = M.shape
    A = [list(r) for r in M.rows]
    L = [[int(i == j) for j in range(m)] for i in range(m)] if transforms else None
    R = [[int(i == j) for j in range(n)] for i in range(n)] if transforms else None

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if L is not None:
            L[i], L[j] = L[j], L[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        if R is not None:
            for row in R:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        A[dst] = [x - q * y for x, y in zip(A[dst], A[src])]
        if L is not None:
            L[dst] = [x - q * y for x, y in zip(L[dst], L[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for row in A:
            row[dst] -= q * row[src]
        if R is not None:
            for row in R:
                row[dst] -= q * row[src]

    diag = []
    t = 0
    while t < min(m, n):
        best = None
        for j in range(t, n):
            for i in range(t, m):
                a = A[i][j]
                if a and (best is None or abs(a) < best[0]):
                    best = (abs(a), i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            changed = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, A[i][t] // A[t][t])
                    if A[i][t]:
                        changed = True
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, A[t][j] // A[t][t])
                    if A[t][j]:
                        changed = True
            if changed:
                # a remainder smaller than the pivot appeared; move it to (t, t)
                cand = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
                cand += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
                _, i, j = min(cand, key=lambda c: (c[0], c[2], c[1]))
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            p = A[t][t]
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            if L is not None:
                L[t] = [-x for x in L[t]]
        diag.append(A[t][t])
        t += 1

    left = IntMatrix.from_rows(L, m) if transforms else None
    right = IntMatrix.from_rows(R, n) if transforms else None
    return SmithForm(tuple(diag), (m, n), left, right)
