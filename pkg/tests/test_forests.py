import pytest

from hodgetrees.complex import complement
from hodgetrees.errors import CapExceededError, ConditionError
from hodgetrees.fixtures import disc, doubled_loop, rp2, triangle_graph
from hodgetrees.forests import (dual_tree_number, enumerate_dual_trees, enumerate_trees,
                                tree_number)
from hodgetrees.graphs import complete_graph, cycle_graph, path_graph
from hodgetrees.homology import relative_homology, subcomplex_homology


def weights(rows):
    return {t.selection.indices: t.weight for t in rows}


class TestTrees:
    def test_triangle(self, triangle):
        rows = enumerate_trees(triangle, 1)
        assert len(rows) == 3 and all(t.weight == 1 for t in rows)

    def test_k4_cayley(self):
        rows = enumerate_trees(complete_graph(4), 1)
        assert sum(1 for t in rows if t.weight) == 16
        assert {t.weight for t in rows} <= {0, 1}

    def test_rp2_has_weight_two(self):
        assert 2 in {t.weight for t in enumerate_trees(rp2(), 2)}

    @pytest.mark.parametrize("n", [3, 4, 5, 7])
    def test_cycle_graph(self, n):
        assert tree_number(cycle_graph(n), 1) == n

    def test_k4_number(self):
        assert tree_number(complete_graph(4), 1) == 16

    def test_doubled_loop_empty_tree(self, loop2):
        assert tree_number(loop2, 1) == 1
        assert weights(enumerate_trees(loop2, 1)) == {(): 1}

    def test_path_graph(self):
        assert tree_number(path_graph(4), 1) == 1

    def test_disconnected_rejected(self):
        from hodgetrees.complex import graph_complex
        G = graph_complex([0, 1, 2], [(0, 1)])
        with pytest.raises(ConditionError):
            tree_number(G, 1)

    def test_cap(self):
        with pytest.raises(CapExceededError):
            enumerate_trees(complete_graph(5), 1, cap=10)


class TestDualTrees:
    def test_triangle(self, triangle):
        assert weights(enumerate_dual_trees(triangle, 1)) == {(): 1}

    def test_doubled_loop(self, loop2):
        assert weights(enumerate_dual_trees(loop2, 1)) == {(0,): 2, (1,): 0}

    def test_disc(self, disc):
        assert weights(enumerate_dual_trees(disc, 1)) == {(0,): 1, (1,): 1, (2,): 1}

    @pytest.mark.parametrize("build,k", [(triangle_graph, 1), (doubled_loop, 4), (disc, 3)])
    def test_numbers(self, build, k):
        assert dual_tree_number(build(), 1) == k

    def test_requires_acyclic_above(self):
        from hodgetrees.complex import adjoin_virtual_cell, Chain
        X = adjoin_virtual_cell(disc(), 2, Chain(1, (0, 0, 0)))
        with pytest.raises(ConditionError):
            dual_tree_number(X, 1)


def _tree_cases():
    return [("triangle", triangle_graph(), 1), ("disc", disc(), 1), ("disc2", disc(), 2),
            ("loop2", doubled_loop(), 1), ("rp2_1", rp2(), 1), ("rp2_2", rp2(), 2),
            ("k4", complete_graph(4), 1)]


@pytest.mark.parametrize("name,X,i", _tree_cases(), ids=lambda v: v if isinstance(v, str) else "")
def test_cauchy_binet_trees(name, X, i):
    assert tree_number(X, i) == sum(t.weight ** 2 for t in enumerate_trees(X, i))


@pytest.mark.parametrize("name,X,i", _tree_cases(), ids=lambda v: v if isinstance(v, str) else "")
def test_cauchy_binet_dual_trees(name, X, i):
    assert dual_tree_number(X, i) == sum(t.weight ** 2 for t in enumerate_dual_trees(X, i))


@pytest.mark.parametrize("name,X,i", _tree_cases(), ids=lambda v: v if isinstance(v, str) else "")
def test_weights_are_homology_orders(name, X, i):
    for t in enumerate_trees(X, i):
        assert t.weight == subcomplex_homology(X, t.selection, i - 1).weight
    for t in enumerate_dual_trees(X, i):
        assert t.weight == relative_homology(X, complement(X, t.selection), i).weight


def test_corpus_oracles(random_corpus):
    for name, X, i in random_corpus:
        assert tree_number(X, i) == sum(t.weight ** 2 for t in enumerate_trees(X, i)), name
        assert dual_tree_number(X, i) == sum(t.weight ** 2 for t in enumerate_dual_trees(X, i)), name
