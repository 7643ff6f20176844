"""Reduced, relative and subcomplex (co)homology over Z via Smith normal form."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .complex import ChainComplex, ComplexError, Selection, complement, subcomplex_chain_maps
from .linalg import IntMatrix, coordinate_matrix, kernel_basis, smith_normal_form


@dataclass(frozen=True)
class HomologySummary:
    dim: int
    rank: int
    torsion: tuple[int, ...] = ()

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    @property
    def order(self) -> int | float:
        """Group order; ``math.inf`` when the free rank is positive."""
        if self.rank:
            return math.inf
        return math.prod(self.torsion)

    @property
    def weight(self) -> int:
        """Order when finite, 0 otherwise (the zero-weight convention)."""
        return self.order if self.rank == 0 else 0

    def __str__(self):
        parts = [f"Z^{self.rank}"] if self.rank else []
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


def homology_of_maps(incoming: IntMatrix, outgoing: IntMatrix, dim: int = 0) -> HomologySummary:
    """ker(outgoing) / im(incoming) for composable integer maps.

    The incoming map is rewritten in a Z-basis of the kernel before the
    Smith form is taken, so the torsion is that of the quotient lattice.
    """
    if incoming.nrows != outgoing.ncols:
        raise ValueError(f"maps are not composable: {incoming.shape} then {outgoing.shape}")
    Z = kernel_basis(outgoing)
    if not Z:
        return HomologySummary(dim, 0)
    B = coordinate_matrix(Z, incoming)
    snf = smith_normal_form(B)
    return HomologySummary(dim, len(Z) - snf.rank, tuple(d for d in snf.diag if d > 1))


def _check_dim(X: ChainComplex, i: int):
    lo = -1 if X.augmented else 0
    if not lo <= i <= X.top_dim + 1:
        raise ComplexError(f"dimension {i} outside [{lo}, {X.top_dim + 1}]")


def reduced_homology(X: ChainComplex, i: int) -> HomologySummary:
    """H_i of the complex (reduced when augmented).

    Dimension top_dim + 1 is accepted and always gives the zero group.
    """
    _check_dim(X, i)
    return homology_of_maps(X.boundary(i + 1), X.boundary(i), i)


def cohomology(X: ChainComplex, i: int) -> HomologySummary:
    """H^i = ker delta_i / im delta_{i-1} (reduced when augmented)."""
    _check_dim(X, i)
    return homology_of_maps(X.coboundary(i - 1), X.coboundary(i), i)


def subcomplex_homology(X: ChainComplex, Y: Selection, j: int) -> HomologySummary:
    """H_j of the subcomplex X^{k-1} u Y where k = Y.dim."""
    k = Y.dim
    if j > k:
        return HomologySummary(j, 0)
    sub = subcomplex_chain_maps(X, Y).sub_boundary
    if j == k:
        return homology_of_maps(IntMatrix.zeros(len(Y), 0), sub, j)
    if j == k - 1:
        return homology_of_maps(sub, X.boundary(k - 1), j)
    return reduced_homology(X, j)


def relative_homology(X: ChainComplex, Y: Selection, j: int) -> HomologySummary:
    """H_j(X, X^{k-1} u Y), computed on the quotient chain complex."""
    k = Y.dim
    if j < k:
        return HomologySummary(j, 0)
    maps = subcomplex_chain_maps(X, Y)
    rest = maps.complement.indices
    if j == k:
        return homology_of_maps(maps.rel_boundary, IntMatrix.zeros(0, len(rest)), j)
    if j == k + 1:
        return homology_of_maps(X.boundary(k + 2), maps.rel_boundary, j)
    return homology_of_maps(X.boundary(j + 1), X.boundary(j), j)


def relative_cohomology(X: ChainComplex, A: Selection, j: int) -> HomologySummary:
    """H^j(X, X^{k-1} u A): cochains vanishing on the subcomplex."""
    k = A.dim
    if j < k:
        return HomologySummary(j, 0)
    rel = subcomplex_chain_maps(X, complement(X, A)).rel_coboundary
    if j == k:
        return homology_of_maps(IntMatrix.zeros(rel.ncols, 0), rel, j)
    if j == k + 1:
        return homology_of_maps(rel, X.coboundary(k + 1), j)
    return homology_of_maps(X.coboundary(j - 1), X.coboundary(j), j)
