"""Small named complexes with hand-checkable invariants."""

from __future__ import annotations

from .complex import ChainComplex, from_matrices, from_simplicial, graph_complex
from .linalg import IntMatrix

RP2_FACETS = [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
    (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4),
]


def triangle_graph() -> ChainComplex:
    """Edges ab, bc, ca oriented around the cycle, so (1, 1, 1) is the cycle."""
    return graph_complex(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")], ["ab", "bc", "ca"])


def disc() -> ChainComplex:
    """Triangle graph with one 2-cell glued along the cycle."""
    X = triangle_graph()
    return from_matrices([X.cells[0], X.cells[1], ["f"]],
                         [X.boundary(1).tolist(), [[1], [1], [1]]])


def doubled_loop() -> ChainComplex:
    """One vertex, loops a and b, one 2-cell f with boundary 2a."""
    return from_matrices([["v"], ["a", "b"], ["f"]], [[[0, 0]], [[2], [0]]])


def rp2() -> ChainComplex:
    """Six-vertex triangulation of the projective plane."""
    return from_simplicial(RP2_FACETS)


def rp2_plus() -> ChainComplex:
    """RP^2 with a second copy of the first triangle: H_1 = Z/2, H_2 = Z."""
    X = rp2()
    d2 = X.boundary(2)
    d2 = d2.hstack(IntMatrix.from_columns([d2.column(0)], d2.nrows))
    return from_matrices([X.cells[0], X.cells[1], list(X.cells[2]) + ["123'"]],
                         [X.boundary(1).tolist(), d2.tolist()])


def annulus() -> ChainComplex:
    """Triangulated annulus: inner triangle 012, outer triangle 345, six 2-cells."""
    facets = [(0, 1, 3), (1, 3, 4), (1, 2, 4), (2, 4, 5), (0, 2, 5), (0, 3, 5)]
    return from_simplicial(facets)


def named() -> dict[str, ChainComplex]:
    return {"triangle": triangle_graph(), "disc": disc(), "doubled_loop": doubled_loop(),
            "rp2": rp2(), "rp2_plus": rp2_plus(), "annulus": annulus()}
