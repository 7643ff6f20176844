"""det of the twisted edge Laplacian over t^2, next to the squared cycle-length sum.

Prints the raw samples so the behaviour as t -> 0 can be inspected directly.
"""

import argparse

import numpy as np

from hodgetrees.graphs import (complete_graph, cycle_graph, cycle_length_profile,
                               laplacian_length_limit, path_graph, twisted_down_laplacian)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--t", type=float, action="append")
    args = ap.parse_args()
    ts = args.t or [1e-1, 1e-2, 1e-3, 1e-4]
    for name, G in (("K4", complete_graph(4)), ("C5", cycle_graph(5)), ("P4", path_graph(4))):
        target = cycle_length_profile(G).squared_length_sum
        est = laplacian_length_limit(G, ts)
        det0 = np.linalg.det(twisted_down_laplacian(G, 0.0)).real
        print(f"{name}: sum l_j j^2 = {target}, det at t=0 = {det0:.6g}")
        for t, v in est.samples:
            print(f"   t={t:<8g} det/t^2 = {v.real:.10g} (imag {v.imag:.2g})")
        print(f"   extrapolated {est.estimate:.10g} +- {est.error:.3g}\n")


if __name__ == "__main__":
    main()
