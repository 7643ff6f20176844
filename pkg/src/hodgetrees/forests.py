"""Spanning trees and dual spanning trees in one dimension of a complex.

An i-tree is a set of i-cells whose boundary columns form a rational basis
of im d_i; its weight is |det| of those columns written in a Z-basis of
the (i-1)-cycles.  Dual trees are the same construction applied to the
coboundary delta_i against a Z-basis of the (i+1)-cocycles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .complex import ChainComplex, Selection
from .errors import CapExceededError, ConditionError
from .linalg import IntMatrix, coordinate_matrix, det, gram_det, kernel_basis, rank

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class TreeSummary:
    selection: Selection
    weight: int


def tree_matrix(X: ChainComplex, i: int) -> IntMatrix:
    """[d_i]_Z: columns of d_i in the canonical Z-basis of ker d_{i-1}."""
    Z = kernel_basis(X.boundary(i - 1))
    return coordinate_matrix(Z, X.boundary(i))


def dual_tree_matrix(X: ChainComplex, i: int) -> IntMatrix:
    """[delta_i]_Z: columns of delta_i in the canonical Z-basis of ker delta_{i+1}."""
    Z = kernel_basis(X.coboundary(i + 1))
    return coordinate_matrix(Z, X.coboundary(i))


def _full_row_rank(A: IntMatrix, what: str) -> IntMatrix:
    if rank(A) != A.nrows:
        raise ConditionError(what)
    return A


def connected_tree_matrix(X: ChainComplex, i: int) -> IntMatrix:
    return _full_row_rank(tree_matrix(X, i),
                          f"rk H_{i - 1} != 0: the complex is not connected in dimension {i}")


def connected_dual_tree_matrix(X: ChainComplex, i: int) -> IntMatrix:
    return _full_row_rank(dual_tree_matrix(X, i),
                          f"rk H_{i + 1} != 0: dual trees in dimension {i} are undefined")


def check_cap(n: int, k: int, cap: int):
    count = math.comb(n, k) if 0 <= k <= n else 0
    if count > cap:
        raise CapExceededError(f"C({n}, {k}) = {count} subsets exceeds cap {cap}")


def _enumerate(A: IntMatrix, dim: int, cap: int) -> list[TreeSummary]:
    r, n = A.shape
    check_cap(n, r, cap)
    return [TreeSummary(Selection(dim, I), abs(det(A.take_columns(I))))
            for I in combinations(range(n), r)]


def enumerate_trees(X: ChainComplex, i: int, cap: int = DEFAULT_CAP) -> list[TreeSummary]:
    """All size-rk(Z_{i-1}) subsets of i-cells with their weights (zero weights kept)."""
    return _enumerate(connected_tree_matrix(X, i), i, cap)


def enumerate_dual_trees(X: ChainComplex, i: int, cap: int = DEFAULT_CAP) -> list[TreeSummary]:
    return _enumerate(connected_dual_tree_matrix(X, i), i, cap)


def tree_number(X: ChainComplex, i: int) -> int:
    """k_i(X) as the Gram determinant of [d_i]_Z."""
    return gram_det(connected_tree_matrix(X, i))


def dual_tree_number(X: ChainComplex, i: int) -> int:
    """k^i(X) as the Gram determinant of [delta_i]_Z."""
    return gram_det(connected_dual_tree_matrix(X, i))
