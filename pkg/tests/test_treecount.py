import random

import pytest

from squarecycle.convexity import closure, enumerate_convex
from squarecycle.graph_core import (
    DomainError,
    EdgeSet,
    max_k,
    square_cycle,
    strip_graph,
    strip_with_tails,
    windows_only,
)
from squarecycle.treecount import (
    LaplacianMinor,
    PartitionFailure,
    count_formula,
    count_matrix_tree,
    count_strip,
    count_strip_with_tails,
    decompose,
    enumerate_spanning_trees,
)
import squarecycle.treecount as treecount

from oracles import brute_force_tree_count, laplacian_cofactor, fraction_det


def test_matrix_tree_examples():
    assert count_matrix_tree(square_cycle(5)) == 125 == 5**3
    assert count_matrix_tree(strip_graph(4)) == 8
    assert count_matrix_tree(strip_graph(1)) == 1


def test_matrix_tree_disconnected_is_zero():
    assert count_matrix_tree(windows_only(8)) == 0
    assert count_matrix_tree(EdgeSet.empty(6)) == 0
    assert count_matrix_tree(EdgeSet.from_indices(6, frames=[0, 1])) == 0


def test_matrix_tree_rejects_other_types():
    with pytest.raises(TypeError):
        count_matrix_tree([(0, 1)])


def test_bareiss_matches_rational_elimination():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(5, 14)
        g = EdgeSet(n, rng.getrandbits(2 * n))
        minor = LaplacianMinor.from_edges(n, g.vertex_pairs())
        assert minor.determinant() == fraction_det(minor.to_dense())
        assert minor.determinant() == laplacian_cofactor(n, g.vertex_pairs(), drop=n - 1)


def test_bareiss_handles_a_general_graph():
    # K_6 on arbitrary labels; Cayley gives 6**4
    edges = [(a, b) for a in range(6) for b in range(a + 1, 6)]
    assert LaplacianMinor.from_edges(6, edges).determinant() == 6**4


def test_matrix_tree_matches_brute_force_small():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(5, 7)
        g = EdgeSet(n, rng.getrandbits(2 * n))
        assert count_matrix_tree(g) == brute_force_tree_count(n, g.vertex_pairs())


@pytest.mark.parametrize("n,expected", [(5, 125), (6, 384), (7, 1183)])
def test_count_formula(n, expected):
    assert count_formula(n) == expected
    assert count_matrix_tree(square_cycle(n)) == expected


def test_count_formula_rejects_small():
    with pytest.raises(DomainError):
        count_formula(4)


def test_count_strip():
    assert count_strip(2) == 1
    assert count_strip(5) == 21 == count_matrix_tree(strip_graph(5))
    assert count_strip(1) == 1
    with pytest.raises(DomainError):
        count_strip(0)


def test_count_strip_with_tails_examples():
    assert count_strip_with_tails(6, 1, 3) == 8 == count_matrix_tree(strip_with_tails(6, 1, 3))
    assert count_strip_with_tails(5, 2, 0) == 1 == count_matrix_tree(strip_with_tails(5, 2, 0))
    assert count_strip_with_tails(9, 0, 0) == 987 == count_matrix_tree(strip_with_tails(9, 0, 0))
    with pytest.raises(DomainError):
        count_strip_with_tails(6, 3, 0)


@pytest.mark.parametrize("n", range(5, 17))
def test_strip_with_tails_counts(n):
    for k in range(max_k(n) + 1):
        for j in range(n):
            assert count_matrix_tree(strip_with_tails(n, k, j)) == count_strip(n - 2 * k)


def test_column_sum_chain():
    for n in range(5, 201):
        assert n * sum(count_strip(n - 2 * k) for k in range(max_k(n) + 1)) == count_formula(n)


def test_enumerate_examples():
    trees = list(enumerate_spanning_trees(square_cycle(5)))
    assert len(trees) == 125 == len(set(trees))
    assert all(len(t) == 4 for t in trees)
    only = strip_with_tails(5, 2, 0)
    assert list(enumerate_spanning_trees(only)) == [only]
    assert list(enumerate_spanning_trees(windows_only(6))) == []
    with pytest.raises(DomainError):
        next(enumerate_spanning_trees(square_cycle(13)))


def test_enumerate_matches_brute_force():
    for n in (5, 6):
        g = square_cycle(n)
        found = {tuple(sorted(t.vertex_pairs())) for t in enumerate_spanning_trees(g)}
        assert len(found) == brute_force_tree_count(n, g.vertex_pairs())


@pytest.mark.parametrize(
    "n,cells",
    [(5, {0: 21, 1: 3, 2: 1}), (6, {0: 55, 1: 8, 2: 1})],
)
def test_decompose_examples(n, cells):
    table = decompose(n)
    for (j, k), count in table.cells.items():
        assert count == cells[k]
        assert count == brute_force_tree_count(n, strip_with_tails(n, k, j).vertex_pairs())
    assert len(table.cells) == n * len(cells)
    assert table.total == count_formula(n)


def test_decompose_json():
    obj = decompose(5).to_json()
    assert obj["n"] == 5 and obj["total"] == "125"
    assert obj["cells"][0] == {"j": 0, "k": 0, "count": "21"}
    assert [(c["k"], c["j"]) for c in obj["cells"]] == sorted((c["k"], c["j"]) for c in obj["cells"])


def test_decompose_reports_witness(monkeypatch):
    # a closure that adds nothing leaves the tree itself, which no label matches
    monkeypatch.setattr(treecount, "_closure_bits", lambda n, bits: bits)
    with pytest.raises(PartitionFailure) as info:
        decompose(5)
    assert "tree" in info.value.witness


@pytest.mark.parametrize("n", range(5, 9))
def test_hull_is_minimal(n):
    convex = list(enumerate_convex(n))
    for t in enumerate_spanning_trees(square_cycle(n)):
        hull = closure(t)
        for c in convex:
            if t <= c:
                assert hull <= c
