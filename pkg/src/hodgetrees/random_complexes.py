"""Random abstract chain complexes that satisfy the unicycle condition.

Boundary columns are drawn as small integer combinations of a kernel
basis of the previous boundary, so d d = 0 holds by construction; draws
whose entries leave [-bound, bound] are rejected.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .complex import ChainComplex, from_matrices
from .linalg import IntMatrix, kernel_basis, rank


@dataclass
class CorpusConfig:
    count: int = 50
    max_cells: int = 12      # cells in the working dimension
    bound: int = 2           # entries of boundary matrices lie in [-bound, bound]
    seed: int = 2021
    dim2_fraction: float = 0.4


def _columns_in_kernel(rng: random.Random, Z, n: int, k: int, bound: int,
                       want_rank: int, tries: int = 200):
    """k columns from the lattice spanned by Z, entries bounded, of total rank ``want_rank``."""
    if k == 0:
        return [] if want_rank == 0 else None
    for _ in range(tries):
        cols = []
        for _ in range(k):
            for _ in range(50):
                coef = [rng.choice((-1, 0, 0, 1, 1, 2)) for _ in Z]
                v = [sum(c * z[j] for c, z in zip(coef, Z)) for j in range(n)]
                if any(v) and max(abs(x) for x in v) <= bound:
                    cols.append(v)
                    break
            else:
                return None
        if rank(IntMatrix.from_columns(cols, n)) == want_rank:
            return cols
    return None


def _random_graph(rng: random.Random, n: int, m: int, loops: bool = True):
    """Connected multigraph incidence (n x m) with +-1 entries; loops give zero columns."""
    edges = []
    for v in range(1, n):
        edges.append((rng.randrange(v), v))
    while len(edges) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v and not (loops and rng.random() < 0.2):
            continue
        edges.append((u, v))
    rng.shuffle(edges)
    rows = [[0] * m for _ in range(n)]
    for c, (u, v) in enumerate(edges):
        if rng.random() < 0.5:
            u, v = v, u
        if u != v:
            rows[u][c] -= 1
            rows[v][c] += 1
    return rows


def _assemble(sizes, mats) -> ChainComplex:
    prefix = "vefgh"
    cells = [[f"{prefix[d]}{k}" for k in range(s)] for d, s in enumerate(sizes)]
    return from_matrices(cells, mats)


def random_graph_unicycle(rng: random.Random, max_cells: int = 12, bound: int = 2) -> ChainComplex | None:
    """Working dimension 1: connected graph plus 2-cells (and maybe 3-cells) leaving one hole."""
    n = rng.randint(1, 5)
    m = rng.randint(max(n, 1), max_cells)
    d1 = _random_graph(rng, n, m)
    Z1 = kernel_basis(IntMatrix.from_rows(d1, m))
    extra = rng.choice((0, 0, 1))
    k2 = len(Z1) - 1 + extra
    cols2 = _columns_in_kernel(rng, Z1, m, k2, bound, len(Z1) - 1)
    if cols2 is None:
        return None
    if extra:
        D2 = IntMatrix.from_columns(cols2, m)
        Z2 = kernel_basis(D2)
        cols3 = _columns_in_kernel(rng, Z2, k2, extra, bound, extra)
        if cols3 is None:
            return None
        return _assemble([n, m, k2, extra], [d1, D2.tolist(), IntMatrix.from_columns(cols3, k2).tolist()])
    return _assemble([n, m, k2], [d1, IntMatrix.from_columns(cols2, m).tolist()] if k2 else
                     [d1, [[] for _ in range(m)]])


def random_surface_unicycle(rng: random.Random, max_cells: int = 12, bound: int = 2) -> ChainComplex | None:
    """Working dimension 2: 2-cells fill H_1 (possibly with torsion), 3-cells leave one hole in H_2."""
    n = rng.randint(1, 3)
    m = rng.randint(max(n - 1, 1), n + 3)
    d1 = _random_graph(rng, n, m)
    Z1 = kernel_basis(IntMatrix.from_rows(d1, m))
    k2 = rng.randint(len(Z1) + 1, min(max_cells, len(Z1) + 4))
    cols2 = _columns_in_kernel(rng, Z1, m, k2, bound, len(Z1))
    if cols2 is None:
        return None
    D2 = IntMatrix.from_columns(cols2, m)
    Z2 = kernel_basis(D2)
    k3 = len(Z2) - 1
    cols3 = _columns_in_kernel(rng, Z2, k2, k3, bound, k3)
    if cols3 is None:
        return None
    D3 = IntMatrix.from_columns(cols3, k2) if k3 else IntMatrix.zeros(k2, 0)
    return _assemble([n, m, k2, k3], [d1, D2.tolist(), D3.tolist()])


def random_unicycle_complex(rng: random.Random, dim: int = 1, max_cells: int = 12,
                            bound: int = 2) -> ChainComplex:
    make = random_graph_unicycle if dim == 1 else random_surface_unicycle
    while True:
        X = make(rng, max_cells, bound)
        if X is not None:
            return X


def corpus(config: CorpusConfig | None = None) -> list[tuple[str, ChainComplex, int]]:
    """Deterministic list of (name, complex, working dimension)."""
    config = config or CorpusConfig()
    rng = random.Random(config.seed)
    out = []
    for k in range(config.count):
        dim = 2 if rng.random() < config.dim2_fraction else 1
        X = random_unicycle_complex(rng, dim, config.max_cells, config.bound)
        out.append((f"random{k:02d}-d{dim}", X, dim))
    return out
