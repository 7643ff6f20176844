import pytest

from hodgetrees.complex import complement, graph_complex
from hodgetrees.cycletrees import (complement_bijection_check, cycle_part_weight_check,
                                   enumerate_cycletrees, enumerate_dual_cycletrees,
                                   is_minimal_cycle, verify_minimal_decomposition)
from hodgetrees.errors import ConditionError, NotACycleError
from hodgetrees.fixtures import annulus, rp2_plus
from hodgetrees.graphs import complete_graph
from hodgetrees.linalg import IntMatrix, kernel_basis, rank


def parts(rows):
    return {U.selection.indices: U.cycle_part.coeffs for U in rows}


class TestCycletrees:
    def test_triangle(self, triangle):
        rows = enumerate_cycletrees(triangle, 1)
        assert len(rows) == 1
        assert rows[0].cycle_part.coeffs in {(1, 1, 1), (-1, -1, -1)}
        assert rows[0].weight == 1

    def test_doubled_loop(self, loop2):
        assert parts(enumerate_cycletrees(loop2, 1)) == {(0,): (1, 0), (1,): (0, 1)}

    def test_k4(self):
        rows = [U for U in enumerate_cycletrees(complete_graph(4), 1) if U.weight]
        lengths = sorted(len(U.cycle_part.support) for U in rows)
        assert len(rows) == 15
        assert lengths.count(3) == 12 and lengths.count(4) == 3

    def test_support_inside_selection(self):
        G = complete_graph(5)
        for U in enumerate_cycletrees(G, 1):
            assert set(U.cycle_part.support) <= set(U.selection.indices)
            assert not any(G.boundary(1).apply(U.cycle_part.coeffs))

    def test_zero_weight_retained(self):
        G = complete_graph(5)
        rows = enumerate_cycletrees(G, 1)
        zero = [U for U in rows if not U.weight]
        assert zero and all(U.cycle_part.is_zero() for U in zero)
        assert all(U.primitive_part is None for U in zero)


class TestWeightCheck:
    def test_triangle(self, triangle):
        chk = cycle_part_weight_check(triangle, enumerate_cycletrees(triangle, 1)[0])
        assert chk.ok and chk.content == 1

    def test_zero_weight_is_infinite(self):
        G = complete_graph(5)
        U = next(U for U in enumerate_cycletrees(G, 1) if not U.weight)
        chk = cycle_part_weight_check(G, U)
        assert chk.ok and not chk.homology.is_finite

    def test_rp2_plus_gcd_two(self):
        X = rp2_plus()
        rows = enumerate_cycletrees(X, 2)
        assert any(U.weight == 2 for U in rows)
        assert all(cycle_part_weight_check(X, U).ok for U in rows)

    def test_dual_parts(self, loop2, disc):
        for X in (loop2, disc):
            for U in enumerate_dual_cycletrees(X, 1):
                assert cycle_part_weight_check(X, U).ok

    def test_primitive_part(self):
        U = next(U for U in enumerate_cycletrees(rp2_plus(), 2) if U.weight == 2)
        assert U.primitive_part.scale(2) == U.cycle_part


class TestMinimal:
    def test_triangle_cycle(self, triangle):
        assert is_minimal_cycle(triangle, 1, (1, 1, 1))

    def test_two_triangles(self):
        G = graph_complex(range(5), [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
        assert is_minimal_cycle(G, 1, (1, 1, 1, 0, 0, 0))
        assert not is_minimal_cycle(G, 1, (1, 1, 1, 1, 1, 1))

    def test_annulus_boundary_splits(self):
        X = annulus()
        idx = X.cells[1].index

        def loop(a, b, c):
            v = [0] * X.size(1)
            v[idx(a + b)], v[idx(b + c)], v[idx(a + c)] = 1, 1, -1
            return v

        inner, outer = loop("0", "1", "2"), loop("3", "4", "5")
        D2 = X.boundary(2)
        # exactly one of inner +- outer bounds the union of the 2-cells
        candidates = [[x + s * y for x, y in zip(inner, outer)] for s in (1, -1)]
        b = next(c for c in candidates if rank(D2.hstack(IntMatrix.from_columns([c], X.size(1)))) == rank(D2))
        assert not is_minimal_cycle(X, 1, b)
        assert is_minimal_cycle(X, 1, inner)
        split = [inner, [x - y for x, y in zip(b, inner)]]
        assert verify_minimal_decomposition(X, 1, b, split)
        assert not verify_minimal_decomposition(X, 1, b, [b])

    def test_not_a_cycle(self, triangle):
        with pytest.raises(NotACycleError):
            is_minimal_cycle(triangle, 1, (1, 0, 0))

    def test_cycletree_parts_minimal(self, random_corpus):
        for name, X, i in random_corpus:
            for U in enumerate_cycletrees(X, i):
                if U.weight:
                    assert is_minimal_cycle(X, i, U.cycle_part), name
            for U in enumerate_dual_cycletrees(X, i):
                if U.weight:
                    assert is_minimal_cycle(X, i, U.cycle_part, cocycle=True), name

    def test_parts_span_cycle_space(self, random_corpus):
        for name, X, i in random_corpus:
            parts_ = [U.cycle_part.as_ints() for U in enumerate_cycletrees(X, i) if U.weight]
            assert rank(IntMatrix.from_rows(parts_, X.size(i))) == len(kernel_basis(X.boundary(i))), name


class TestDualCycletrees:
    def test_triangle(self, triangle):
        rows = enumerate_dual_cycletrees(triangle, 1)
        assert len(rows) == 3
        for U in rows:
            assert U.weight == 1 and sorted(map(abs, U.cycle_part.coeffs)) == [0, 0, 1]
            assert U.cycle_part.support == U.selection.indices

    def test_doubled_loop(self, loop2):
        rows = enumerate_dual_cycletrees(loop2, 1)
        assert len(rows) == 1
        assert rows[0].selection.indices == (0, 1)
        assert rows[0].cycle_part.coeffs == (0, -2) and rows[0].content == 2

    def test_disc_cuts(self, disc):
        rows = enumerate_dual_cycletrees(disc, 1)
        assert len(rows) == 3
        for U in rows:
            assert len(U.cycle_part.support) == 2 and U.content == 1
            assert not any(disc.coboundary(1).apply(U.cycle_part.coeffs))


class TestBijection:
    def test_triangle(self, triangle):
        rep = complement_bijection_check(triangle, 1)
        assert rep.ok and rep.cycletrees == 1

    def test_doubled_loop(self, loop2):
        rep = complement_bijection_check(loop2, 1)
        assert rep.ok, rep.failures

    @pytest.mark.parametrize("X,i", [(annulus(), 1), (rp2_plus(), 2)])
    def test_fixtures(self, X, i):
        rep = complement_bijection_check(X, i)
        assert rep.ok, rep.failures

    def test_rejected_without_unicycle(self, disc):
        with pytest.raises(ConditionError):
            complement_bijection_check(disc, 1)
        with pytest.raises(ConditionError):
            complement_bijection_check(complete_graph(4), 1)

    def test_corpus(self, random_corpus):
        for name, X, i in random_corpus[:15]:
            rep = complement_bijection_check(X, i)
            assert rep.ok, (name, rep.failures)

    def test_complements_have_dual_tree_size(self, loop2):
        for U in enumerate_cycletrees(loop2, 1):
            assert len(complement(loop2, U.selection)) == 1
