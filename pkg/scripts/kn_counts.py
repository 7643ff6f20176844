"""Cycletrees of K_n: closed form against enumeration."""

import argparse
import time

from hodgetrees.cycletrees import enumerate_cycletrees
from hodgetrees.graphs import complete_graph, count_cycletrees_complete


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6, help="largest n to enumerate")
    ap.add_argument("--formula-up-to", type=int, default=12)
    args = ap.parse_args()
    print(f"{'n':>3} {'closed form':>16} {'enumerated':>12} {'seconds':>8}")
    for n in range(3, args.formula_up_to + 1):
        closed = count_cycletrees_complete(n)
        if n <= args.max_n:
            t0 = time.perf_counter()
            enum = sum(1 for U in enumerate_cycletrees(complete_graph(n), 1, cap=10 ** 7) if U.weight)
            print(f"{n:>3} {closed:>16} {enum:>12} {time.perf_counter() - t0:>8.2f}")
        else:
            print(f"{n:>3} {closed:>16} {'-':>12}")


if __name__ == "__main__":
    main()
