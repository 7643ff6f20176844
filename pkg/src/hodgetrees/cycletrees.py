"""Cycletrees, dual cycletrees and their minimal (co)cycles."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .complex import Chain, ChainComplex, Selection, complement
from .errors import NotACycleError
from .forests import (DEFAULT_CAP, check_cap, connected_dual_tree_matrix,
                      connected_tree_matrix, dual_tree_matrix, tree_matrix)
from .homology import (HomologySummary, cohomology, reduced_homology, relative_cohomology,
                       relative_homology, subcomplex_homology)
from .linalg import IntMatrix, cofactor_kernel_vector, content, det, rank
from .winding import cutting_form, winding_form


@dataclass(frozen=True)
class CycletreeSummary:
    selection: Selection
    cycle_part: Chain
    content: int
    dual: bool = False

    @property
    def weight(self) -> int:
        return self.content

    @property
    def primitive_part(self) -> Chain | None:
        if self.content == 0:
            return None
        return Chain(self.cycle_part.dim, tuple(a // self.content for a in self.cycle_part))


def _cycle_parts(A: IntMatrix, dim: int, cap: int, dual: bool) -> list[CycletreeSummary]:
    r, n = A.shape
    check_cap(n, r + 1, cap)
    out = []
    for I in combinations(range(n), r + 1):
        v = cofactor_kernel_vector(A.take_columns(I))
        coeffs = [0] * n
        for k, x in zip(I, v):
            coeffs[k] = x
        out.append(CycletreeSummary(Selection(dim, I), Chain(dim, tuple(coeffs)), content(v), dual))
    return out


def enumerate_cycletrees(X: ChainComplex, i: int, cap: int = DEFAULT_CAP) -> list[CycletreeSummary]:
    """Every (rk Z_{i-1} + 1)-subset of i-cells with its cycle part.

    Zero-weight cycletrees are kept, with a zero cycle part.
    """
    return _cycle_parts(connected_tree_matrix(X, i), i, cap, False)


def enumerate_dual_cycletrees(X: ChainComplex, i: int, cap: int = DEFAULT_CAP) -> list[CycletreeSummary]:
    """Every (rk Z^{i+1} + 1)-subset of i-cells with its cocycle part."""
    return _cycle_parts(connected_dual_tree_matrix(X, i), i, cap, True)


@dataclass(frozen=True)
class WeightCheck:
    content: int
    homology: HomologySummary

    @property
    def ok(self) -> bool:
        return self.content == self.homology.weight


def cycle_part_weight_check(X: ChainComplex, U: CycletreeSummary) -> WeightCheck:
    """Compare gcd(C_U) with the homology order it should equal.

    For a cycletree U that is |H_{i-1}(U)|; for a dual cycletree it is
    |H^{i+1}(X, complement(U))|.  Infinite orders match content 0.
    """
    i = U.selection.dim
    if U.dual:
        h = relative_cohomology(X, complement(X, U.selection), i + 1)
    else:
        h = subcomplex_homology(X, U.selection, i - 1)
    return WeightCheck(U.content, h)


def _is_circuit(M: IntMatrix, support: Sequence[int]) -> bool:
    cols = list(support)
    k = len(cols)
    if rank(M.take_columns(cols)) != k - 1:
        return False
    return all(rank(M.take_columns(cols[:j] + cols[j + 1:])) == k - 1 for j in range(k))


def is_minimal_cycle(X: ChainComplex, i: int, z: Chain | Sequence[int], cocycle: bool = False) -> bool:
    """True iff no nonzero (co)cycle has support strictly inside supp(z).

    Decided as a circuit test on the columns of d_i (delta_i for cocycles)
    indexed by the support.
    """
    M = X.coboundary(i) if cocycle else X.boundary(i)
    coeffs = tuple(z)
    if any(M.apply(coeffs)):
        raise NotACycleError("not a cocycle" if cocycle else "not a cycle")
    support = [k for k, a in enumerate(coeffs) if a]
    if not support:
        raise ValueError("the zero chain has no minimal support")
    return _is_circuit(M, support)


def verify_minimal_decomposition(X: ChainComplex, i: int, b: Sequence[int],
                                 parts: Sequence[Sequence[int]], cocycle: bool = False) -> bool:
    """Check a claimed split of a minimal (co)boundary into at most two minimal (co)cycles."""
    if not 1 <= len(parts) <= 2:
        return False
    total = [sum(col) for col in zip(*parts)]
    if tuple(total) != tuple(b):
        return False
    return all(is_minimal_cycle(X, i, p, cocycle) for p in parts)


@dataclass
class BijectionReport:
    ok: bool = True
    cycletrees: int = 0
    dual_cycletrees: int = 0
    failures: list[str] = field(default_factory=list)

    def fail(self, msg: str):
        self.ok = False
        self.failures.append(msg)


def complement_bijection_check(X: ChainComplex, i: int, cap: int = DEFAULT_CAP) -> BijectionReport:
    """Check the complement correspondences between cycletrees and dual trees.

    Cycletree U  <->  dual tree complement(U):  |w(C_U)| = wt(complement U) |H_{i-1}|.
    Dual cycletree U* <-> tree complement(U*):  |c(C_U*)| = wt(complement U*) |H^{i+1}|.
    Also checks the zero-iff-zero statements and, for cycletrees with a
    nonzero winding number, wt(U) |w(C_U / gcd)| = |H_i(X, U)| |H_{i-1}(X)|.
    """
    from .harmonic import require_unicycle

    require_unicycle(X, i)
    rep = BijectionReport()
    below = reduced_homology(X, i - 1).order
    above = cohomology(X, i + 1).order
    w = winding_form(X, i)
    c = cutting_form(X, i)

    D = dual_tree_matrix(X, i)
    for U in enumerate_cycletrees(X, i, cap):
        rep.cycletrees += 1
        T = complement(X, U.selection)
        if len(T) != D.nrows:
            rep.fail(f"complement of cycletree {U.selection.indices} has {len(T)} cells, "
                     f"dual trees have {D.nrows}")
            continue
        wt_T = abs(det(D.take_columns(T.indices)))
        wU = abs(w(U.cycle_part))
        if wU != wt_T * below:
            rep.fail(f"cycletree {U.selection.indices}: |w| = {wU} != {wt_T} * {below}")
        if wU:
            rel = relative_homology(X, U.selection, i)
            if not rel.is_finite or U.weight * abs(w(U.primitive_part)) != rel.order * below:
                rep.fail(f"cycletree {U.selection.indices}: exact-sequence identity fails")
        elif relative_homology(X, U.selection, i).is_finite:
            rep.fail(f"cycletree {U.selection.indices}: w = 0 but H_i(X, U) is finite")

    A = tree_matrix(X, i)
    for U in enumerate_dual_cycletrees(X, i, cap):
        rep.dual_cycletrees += 1
        T = complement(X, U.selection)
        if len(T) != A.nrows:
            rep.fail(f"complement of dual cycletree {U.selection.indices} has {len(T)} cells, "
                     f"trees have {A.nrows}")
            continue
        wt_T = abs(det(A.take_columns(T.indices)))
        cU = abs(c(U.cycle_part))
        if cU != wt_T * above:
            rep.fail(f"dual cycletree {U.selection.indices}: |c| = {cU} != {wt_T} * {above}")
    return rep
