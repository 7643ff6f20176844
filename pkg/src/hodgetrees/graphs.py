"""Graph-specific counts: cycletrees of K_n, cycle-length profiles, and the
twisted edge-Laplacian determinant."""

from __future__ import annotations

import cmath
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

from .complex import ChainComplex, graph_complex
from .cycletrees import enumerate_cycletrees
from .errors import ConditionError
from .forests import DEFAULT_CAP, tree_number
from .homology import reduced_homology


def complete_graph(n: int) -> ChainComplex:
    return graph_complex(list(range(n)), list(combinations(range(n), 2)))


def cycle_graph(n: int) -> ChainComplex:
    return graph_complex(list(range(n)), [(k, (k + 1) % n) for k in range(n)])


def path_graph(n: int) -> ChainComplex:
    return graph_complex(list(range(n)), [(k, k + 1) for k in range(n - 1)])


def count_cycletrees_complete(n: int) -> int:
    """Number of cycletrees (unicyclic spanning subgraphs) of K_n.

    C(n-1, 2) e^n Gamma(n-2, n), with the incomplete gamma at integer
    order expanded as (n-3)! e^{-n} sum_{k<n-2} n^k / k!, all exact.
    """
    if n < 3:
        raise ValueError("K_n has cycletrees only for n >= 3")
    s = sum(Fraction(n ** k, math.factorial(k)) for k in range(n - 2))
    total = math.comb(n - 1, 2) * math.factorial(n - 3) * s
    assert total.denominator == 1
    return int(total)


def _graph_part(G: ChainComplex) -> ChainComplex:
    if G.top_dim < 1:
        raise ConditionError("need a complex with edges")
    G1 = G.skeleton(1) if G.top_dim > 1 else G
    if reduced_homology(G1, 0).rank:
        raise ConditionError("graph is disconnected")
    return G1


@dataclass(frozen=True)
class CycleLengthProfile:
    counts: dict[int, int]   # cycle length j -> number of cycletrees l_j
    n: int
    m: int
    k1: int

    @property
    def lhs(self) -> int:
        return (self.m - self.n + 1) * self.k1

    @property
    def rhs(self) -> int:
        return sum(j * l for j, l in self.counts.items())

    @property
    def squared_length_sum(self) -> int:
        return sum(j * j * l for j, l in self.counts.items())

    @property
    def identity_holds(self) -> bool:
        return self.lhs == self.rhs

    def __str__(self):
        ls = " ".join(f"l{j}={l}" for j, l in sorted(self.counts.items())) or "(no cycletrees)"
        status = "OK" if self.identity_holds else "FAIL"
        return f"{ls}; identity {self.lhs}={self.rhs} {status}"


def cycle_length_profile(G: ChainComplex, cap: int = DEFAULT_CAP) -> CycleLengthProfile:
    """l_j for every cycle length j, from the supports of the cycletrees' cycle parts."""
    G1 = _graph_part(G)
    counts = Counter(len(U.cycle_part.support) for U in enumerate_cycletrees(G1, 1, cap) if U.content)
    return CycleLengthProfile(dict(sorted(counts.items())), G1.size(0), G1.size(1), tree_number(G1, 1))


def twisted_down_laplacian(G: ChainComplex, t: float) -> np.ndarray:
    """d_1^t d_1 with each nonzero off-diagonal entry (e, f) replaced by
    -exp(i t) when e precedes f in the edge order and -exp(-i t) otherwise."""
    G1 = _graph_part(G)
    B = np.array(G1.boundary(1).tolist(), dtype=float).reshape(G1.size(0), G1.size(1))
    L = (B.T @ B).astype(complex)
    m = L.shape[0]
    up, down = -cmath.exp(1j * t), -cmath.exp(-1j * t)
    for e in range(m):
        for f in range(m):
            if e != f and L[e, f] != 0:
                L[e, f] = up if e < f else down
    return L


@dataclass(frozen=True)
class LimitEstimate:
    estimate: float
    error: float               # disagreement between the two Richardson estimates
    imaginary_residual: float  # largest |Im det / t^2| over the samples
    samples: tuple[tuple[float, complex], ...]


def laplacian_length_limit(G: ChainComplex, t_values: Sequence[float] = (1e-2, 1e-3, 1e-4)) -> LimitEstimate:
    """Extrapolate det(twisted_down_laplacian(t)) / t^2 to t -> 0.

    Two-point Richardson elimination of the t^2 term on consecutive pairs;
    the last pair gives the estimate and the spread between pairs the error.
    """
    ts = sorted(t_values, reverse=True)
    if len(ts) < 2:
        raise ValueError("need at least two t values")
    samples = tuple((t, complex(np.linalg.det(twisted_down_laplacian(G, t))) / t ** 2) for t in ts)
    rich = [(a[0] ** 2 * b[1].real - b[0] ** 2 * a[1].real) / (a[0] ** 2 - b[0] ** 2)
            for a, b in zip(samples, samples[1:])]
    err = abs(rich[-1] - rich[-2]) if len(rich) > 1 else abs(rich[-1] - samples[-1][1].real)
    imag = max(abs(v.imag) for _, v in samples)
    return LimitEstimate(rich[-1], err, imag, samples)
