"""Finite chain complexes given by integer boundary matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .linalg import IntMatrix, dot


class ComplexError(ValueError):
    pass


@dataclass(frozen=True)
class ChainComplex:
    """Cells per dimension plus boundary matrices ``boundaries[i-1] = d_i``.

    With ``augmented`` set, d_0 is the all-ones row into the (-1)-chains,
    so every homology group computed from the complex is reduced.
    """
    cells: tuple[tuple[str, ...], ...]
    boundaries: tuple[IntMatrix, ...]
    augmented: bool = True

    def __post_init__(self):
        if not self.cells:
            raise ComplexError("a complex needs at least one dimension of cells")
        if len(self.boundaries) != len(self.cells) - 1:
            raise ComplexError(f"{len(self.cells)} cell dimensions need "
                               f"{len(self.cells) - 1} boundary matrices")
        for i, B in enumerate(self.boundaries, start=1):
            want = (len(self.cells[i - 1]), len(self.cells[i]))
            if B.shape != want:
                raise ComplexError(f"boundary {i} has shape {B.shape}, expected {want}")

    @property
    def top_dim(self) -> int:
        return len(self.cells) - 1

    def size(self, i: int) -> int:
        if i == -1:
            return int(self.augmented)
        if 0 <= i <= self.top_dim:
            return len(self.cells[i])
        return 0

    def boundary(self, i: int) -> IntMatrix:
        """d_i : C_i -> C_{i-1}, zero outside the stored range."""
        if 1 <= i <= self.top_dim:
            return self.boundaries[i - 1]
        if i == 0 and self.augmented:
            return IntMatrix.from_rows([[1] * self.size(0)], self.size(0))
        return IntMatrix.zeros(self.size(i - 1), self.size(i))

    def coboundary(self, i: int) -> IntMatrix:
        """delta_i : C^i -> C^{i+1}, the transpose of d_{i+1}."""
        return self.boundary(i + 1).T

    def laplacian(self, i: int) -> IntMatrix:
        down = self.boundary(i)
        up = self.boundary(i + 1)
        a = down.T @ down
        b = up @ up.T
        return IntMatrix.from_rows([[x + y for x, y in zip(r, s)] for r, s in zip(a.rows, b.rows)],
                                   self.size(i))

    def selection(self, dim: int, indices: Iterable[int]) -> "Selection":
        idx = tuple(sorted(set(int(k) for k in indices)))
        if idx and (idx[0] < 0 or idx[-1] >= self.size(dim)):
            raise ComplexError(f"cell index out of range for dimension {dim}")
        return Selection(dim, idx)

    def chain(self, dim: int, coeffs: Sequence) -> "Chain":
        if len(coeffs) != self.size(dim):
            raise ComplexError(f"chain of length {len(coeffs)} in dimension {dim} "
                               f"with {self.size(dim)} cells")
        return Chain(dim, tuple(coeffs))

    def unit_chain(self, dim: int, k: int) -> "Chain":
        return Chain(dim, tuple(int(j == k) for j in range(self.size(dim))))

    def skeleton(self, k: int) -> "ChainComplex":
        return ChainComplex(self.cells[:k + 1], self.boundaries[:k], self.augmented)

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * len(c) for i, c in enumerate(self.cells))


@dataclass(frozen=True)
class Selection:
    """A member of S_i: the (i-1)-skeleton together with the i-cells ``indices``."""
    dim: int
    indices: tuple[int, ...]

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, k):
        return k in self.indices


@dataclass(frozen=True)
class Chain:
    """Coefficient vector on the cells of one dimension (ints or Fractions)."""
    dim: int
    coeffs: tuple

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __add__(self, other: "Chain") -> "Chain":
        self._check(other)
        return Chain(self.dim, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Chain") -> "Chain":
        self._check(other)
        return Chain(self.dim, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Chain":
        return Chain(self.dim, tuple(-a for a in self.coeffs))

    def scale(self, s) -> "Chain":
        return Chain(self.dim, tuple(_tidy(s * a) for a in self.coeffs))

    def dot(self, other) -> Fraction | int:
        if isinstance(other, Chain):
            self._check(other)
            other = other.coeffs
        return dot(self.coeffs, other)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(k for k, a in enumerate(self.coeffs) if a)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integral(self) -> bool:
        return all(Fraction(a).denominator == 1 for a in self.coeffs)

    def as_ints(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError("chain has non-integer coefficients")
        return tuple(int(a) for a in self.coeffs)

    def _check(self, other):
        if other.dim != self.dim or len(other) != len(self):
            raise ValueError("chains live in different chain groups")


def _tidy(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    location: tuple[int, int, int] | None = None  # (i, row, col) of d_{i-1} d_i
    value: int = 0

    def __str__(self):
        if self.ok:
            return "ok: all boundary compositions vanish"
        i, r, c = self.location
        return (f"FAIL: (d_{i - 1} d_{i})[{r}][{c}] = {self.value} "
                f"(i={i}, row={r}, col={c})")


def validate(X: ChainComplex) -> ValidationReport:
    lo = 1 if X.augmented else 2
    for i in range(lo, X.top_dim + 1):
        P = X.boundary(i - 1) @ X.boundary(i)
        for r, row in enumerate(P.rows):
            for c, v in enumerate(row):
                if v:
                    return ValidationReport(False, (i, r, c), v)
    return ValidationReport(True)


def from_matrices(cells: Sequence[Sequence[str]], boundaries: Sequence[Sequence[Sequence[int]]],
                  augmented: bool = True) -> ChainComplex:
    """Build from plain nested lists; ``boundaries[k]`` is d_{k+1}."""
    cells = tuple(tuple(str(c) for c in level) for level in cells)
    mats = tuple(IntMatrix.from_rows(b, len(cells[k + 1])) for k, b in enumerate(boundaries))
    return ChainComplex(cells, mats, augmented)


def _sort_key(v):
    return (0, v) if isinstance(v, (int,)) else (1, str(v))


def from_simplicial(facets: Iterable[Iterable[Hashable]]) -> ChainComplex:
    """Simplicial chain complex generated by ``facets``.

    Vertices are totally ordered (ints numerically, anything else by its
    string); each simplex is stored as a sorted vertex tuple and the cells
    of each dimension are in lexicographic order.  The boundary of
    [v0 ... vk] is sum_j (-1)^j [v0 .. ^vj .. vk].
    """
    facets = [tuple(sorted(set(f), key=_sort_key)) for f in facets]
    facets = [f for f in facets if f]
    if not facets:
        raise ComplexError("no facets given")
    simplices: set[tuple] = set()
    for f in facets:
        for k in range(1, len(f) + 1):
            simplices.update(combinations(f, k))
    d = max(len(f) for f in facets) - 1
    levels = [sorted((s for s in simplices if len(s) == k + 1),
                     key=lambda s: tuple(_sort_key(v) for v in s)) for k in range(d + 1)]
    index = [{s: n for n, s in enumerate(level)} for level in levels]
    mats = []
    for k in range(1, d + 1):
        rows = [[0] * len(levels[k]) for _ in levels[k - 1]]
        for col, s in enumerate(levels[k]):
            for j in range(len(s)):
                rows[index[k - 1][s[:j] + s[j + 1:]]][col] = (-1) ** j
        mats.append(IntMatrix.from_rows(rows, len(levels[k])))
    sep = "" if all(len(str(s[0])) == 1 for s in levels[0]) else ","
    cells = tuple(tuple(sep.join(str(v) for v in s) for s in level) for level in levels)
    return ChainComplex(cells, tuple(mats), True)


def graph_complex(vertices: Sequence[Hashable], edges: Sequence[tuple], labels=None) -> ChainComplex:
    """1-dimensional complex; edge (u, v) is oriented u -> v so d(e) = v - u.

    Loops (u == v) get a zero boundary column.
    """
    vidx = {v: k for k, v in enumerate(vertices)}
    rows = [[0] * len(edges) for _ in vertices]
    for col, (u, v) in enumerate(edges):
        if u != v:
            rows[vidx[u]][col] -= 1
            rows[vidx[v]][col] += 1
    if labels is None:
        labels = [f"{u}{v}" for u, v in edges]
    return from_matrices([[str(v) for v in vertices], labels], [rows])


def complement(X: ChainComplex, Y: Selection) -> Selection:
    """The selection carrying exactly the i-cells that ``Y`` omits."""
    chosen = set(Y.indices)
    return Selection(Y.dim, tuple(k for k in range(X.size(Y.dim)) if k not in chosen))


def adjoin_virtual_cell(X: ChainComplex, i: int, z: Chain, label: str | None = None) -> ChainComplex:
    """X (+) e: one extra i-cell whose boundary column is the (i-1)-cycle ``z``."""
    if i < 1:
        raise ComplexError("virtual cells are adjoined in dimension >= 1")
    if z.dim != i - 1 or len(z) != X.size(i - 1):
        raise ComplexError(f"boundary of a virtual {i}-cell must be an {i - 1}-chain")
    col = z.as_ints()
    if any(X.boundary(i - 1).apply(col)):
        raise ComplexError("boundary of a virtual cell must be a cycle")
    cells = [list(c) for c in X.cells]
    mats = list(X.boundaries)
    if i > X.top_dim:
        if i > X.top_dim + 1:
            raise ComplexError("can only extend the complex by one dimension")
        cells.append([])
        mats.append(IntMatrix.zeros(X.size(i - 1), 0))
    cells[i].append(label or f"<e{len(cells[i])}>")
    mats[i - 1] = mats[i - 1].hstack(IntMatrix.from_columns([col], X.size(i - 1)))
    if i + 1 <= X.top_dim:
        up = mats[i]
        mats[i] = up.vstack(IntMatrix.zeros(1, up.ncols))
    return ChainComplex(tuple(tuple(c) for c in cells), tuple(mats), X.augmented)


@dataclass(frozen=True)
class RestrictedMaps:
    """Boundary data of the subcomplex A = X^{i-1} u Y and of the pair (X, A).

    sub_boundary      d_i restricted to the columns of Y (A in degree i).
    rel_boundary      d_{i+1} with only the rows outside Y: the degree-(i+1)
                      boundary of the quotient C(X)/C(A).
    rel_coboundary    delta_i restricted to the columns of Y: the relative
                      coboundary of the pair (X, X^{i-1} u complement(Y)).
    """
    selection: Selection
    complement: Selection
    sub_boundary: IntMatrix
    rel_boundary: IntMatrix
    rel_coboundary: IntMatrix


def subcomplex_chain_maps(X: ChainComplex, Y: Selection) -> RestrictedMaps:
    i = Y.dim
    Yc = complement(X, Y)
    return RestrictedMaps(
        selection=Y,
        complement=Yc,
        sub_boundary=X.boundary(i).take_columns(Y.indices),
        rel_boundary=X.boundary(i + 1).take_rows(Yc.indices),
        rel_coboundary=X.coboundary(i).take_columns(Y.indices),
    )
