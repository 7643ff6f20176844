"""Winding numbers with a lattice basis of the boundary image versus greedy columns.

On a theta graph whose two 2-cells have boundaries 2z and 3z, the greedy
column choice keeps only the 2z column and so doubles every winding number,
while |H_1(X + e)| for a virtual 2-cell bounding z is 1.
"""

from hodgetrees.complex import Chain, adjoin_virtual_cell, from_matrices
from hodgetrees.homology import reduced_homology
from hodgetrees.winding import winding_form


def theta():
    d1 = [[-1, -1, -1], [1, 1, 1]]
    d2 = [[2, 3], [-2, -3], [0, 0]]
    d3 = [[3], [-2]]
    return from_matrices([["u", "v"], ["a", "b", "c"], ["f", "g"], ["t"]], [d1, d2, d3])


def main():
    X = theta()
    for z in [(1, -1, 0), (0, 1, -1), (2, -2, 0)]:
        order = reduced_homology(adjoin_virtual_cell(X, 2, Chain(1, z)), 1)
        lat = winding_form(X, 1, reduction="lattice")(z)
        col = winding_form(X, 1, reduction="columns")(z)
        print(f"z={z}: |H_1(X+e)| = {order.order if order.is_finite else 'inf'}, "
              f"w lattice = {lat}, w greedy columns = {col}")


if __name__ == "__main__":
    main()
