from hypothesis import strategies as st

from hodgetrees.linalg import IntMatrix


def int_matrices(max_rows=5, max_cols=6, lo=-3, hi=3, min_rows=0, min_cols=0):
    return st.integers(min_rows, max_rows).flatmap(
        lambda r: st.integers(min_cols, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c),
                               min_size=r, max_size=r).map(lambda rows: IntMatrix.from_rows(rows, c))))


def square_matrices(max_n=5, lo=-4, hi=4):
    return st.integers(0, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n),
                           min_size=n, max_size=n).map(lambda rows: IntMatrix.from_rows(rows, n)))


def wide_matrices(max_n=4, lo=-3, hi=3):
    """n x (n+1) matrices for the cofactor construction."""
    return st.integers(0, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n + 1, max_size=n + 1),
                           min_size=n, max_size=n).map(lambda rows: IntMatrix.from_rows(rows, n + 1)))
