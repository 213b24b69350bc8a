"""Oracles against textbook values on named graphs."""
import pytest

from nnograph import oracle as O
from nnograph.errors import TooLarge
from nnograph.fixtures import C4, C6, K2, K4, P5, STAR3, satellite_graph
from nnograph.graph import Graph, complement, is_hamiltonian_cycle, is_hamiltonian_path

K33 = satellite_graph(3, 3)


def test_hamiltonicity():
    assert is_hamiltonian_cycle(C6, O.brute_hamiltonian_cycle(C6))
    assert O.brute_hamiltonian_cycle(P5) is None
    assert is_hamiltonian_path(P5, O.brute_hamiltonian_path(P5))
    assert O.brute_hamiltonian_path(STAR3) is None
    assert O.brute_hamiltonian_path(P5, start="p2") is None
    assert O.brute_hamiltonian_path(C6, start="c1", end="c4") is None
    assert O.brute_hamiltonian_path(C6, start="c1", end="c2") is not None


def test_widths_and_fill():
    assert O.brute_treewidth(P5) == 1
    assert O.brute_treewidth(C6) == 2
    assert O.brute_treewidth(K4) == 3
    assert O.brute_treewidth(K33) == 3
    assert O.brute_min_fill_in(C4) == 1
    assert O.brute_min_fill_in(C6) == 3
    assert O.brute_min_fill_in(K4) == 0
    assert O.brute_min_fill_in(K33, max_clique=3) is None


def test_cycles_and_paths():
    assert O.brute_cycle_lengths(K33) == {4, 6}
    assert len(O.brute_longest_path(STAR3)) == 3
    assert O.brute_longest_cycle(P5) is None
    assert O.brute_path_cover(STAR3)[0] == 2
    assert O.brute_path_cover(satellite_graph(1, 4))[0] == 3
    assert O.brute_homogeneously_traceable(C6)
    assert not O.brute_homogeneously_traceable(P5)


def test_steiner():
    assert sorted(O.brute_steiner_path(C6, ["c1", "c3"])) == ["c1", "c2", "c3"]
    assert O.brute_steiner_cycle(P5, ["p1"]) is None
    assert O.brute_steiner_path(STAR3, ["l1", "l2", "l3"]) is None


def test_separators_and_domination():
    assert O.brute_chvatal_cycle(C6) == (True, None)
    ok, sep = O.brute_chvatal_path(STAR3)
    assert not ok and sep == ["c"]
    assert len(O.brute_min_connected_dominating_set(P5)) == 3
    assert O.brute_min_leaf_spanning_tree(STAR3)[0] == 3
    assert O.brute_min_leaf_spanning_tree(K2)[0] == 2


def test_independence_and_connectivity():
    assert O.brute_independence_number(C6) == 3
    assert O.brute_independence_number(complement(K33)) == 2
    assert O.brute_vertex_connectivity(C6) == 2
    assert O.brute_vertex_connectivity(P5) == 1
    assert O.brute_vertex_connectivity(K4) == 3


def test_bounds_enforced():
    big = Graph((), [(f"a{k}", f"a{k + 1}") for k in range(20)])
    with pytest.raises(TooLarge):
        O.brute_treewidth(big)
    with pytest.raises(TooLarge):
        O.brute_hamiltonian_cycle(big)
