"""Winding numbers of cycles and cutting numbers of cocycles.

Both are the same determinant: a (co)cycle written in a Z-basis of the
(co)cycle lattice, next to a basis of the (co)boundary lattice written in
the same coordinates.  With one-dimensional homology the bordered matrix
is square.  The sign depends on the bases; callers that need a fixed
orientation (see ``harmonic``) multiply by a global sign.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Sequence

from .complex import Chain, ChainComplex
from .errors import ConditionError, NotACycleError
from .linalg import (IntMatrix, coordinate_matrix, det, image_basis, independent_columns,
                     kernel_basis, lattice_coordinates, rank)


@dataclass(frozen=True)
class DeterminantForm:
    basis: tuple[tuple[int, ...], ...]
    reduced: IntMatrix
    outgoing: IntMatrix
    kind: str

    def is_cycle(self, z: Sequence[int]) -> bool:
        return not any(self.outgoing.apply(tuple(z)))

    def __call__(self, z: Chain | Sequence[int]) -> int:
        coeffs = z.as_ints() if isinstance(z, Chain) else tuple(int(x) for x in z)
        if not self.is_cycle(coeffs):
            raise NotACycleError(f"chain is not a {self.kind}")
        col = IntMatrix.from_columns([lattice_coordinates(self.basis, coeffs)], len(self.basis))
        return det(col.hstack(self.reduced))

    @property
    def fingerprint(self) -> str:
        h = hashlib.sha256()
        h.update(repr((self.kind, self.basis, self.reduced.rows)).encode())
        return h.hexdigest()[:16]


def _form(outgoing: IntMatrix, incoming: IntMatrix, kind: str, reduction: str) -> DeterminantForm:
    Z = kernel_basis(outgoing)
    if reduction == "lattice":
        gens = image_basis(incoming)
    elif reduction == "columns":
        gens = [incoming.column(j) for j in independent_columns(incoming)]
    else:
        raise ValueError(f"unknown reduction {reduction!r}")
    if len(Z) - len(gens) != 1:
        raise ConditionError(f"{kind} numbers need rank-1 homology; "
                             f"got rank {len(Z) - len(gens)}")
    reduced = coordinate_matrix(Z, IntMatrix.from_columns(gens, incoming.nrows))
    assert rank(reduced) == len(gens)
    return DeterminantForm(tuple(Z), reduced, outgoing, kind)


def winding_form(X: ChainComplex, i: int, reduction: str = "lattice") -> DeterminantForm:
    """z -> det([z]_Z, [reduced d_{i+1}]_Z) on i-cycles."""
    return _form(X.boundary(i), X.boundary(i + 1), "cycle", reduction)


def cutting_form(X: ChainComplex, i: int, reduction: str = "lattice") -> DeterminantForm:
    """z -> det([z]_Z, [reduced delta_{i-1}]_Z) on i-cocycles."""
    return _form(X.coboundary(i), X.coboundary(i - 1), "cocycle", reduction)
