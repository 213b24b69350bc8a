import pytest
from hypothesis import given, settings

from nnograph import oracle
from nnograph.errors import InvalidDecomposition
from nnograph.fixtures import F1, F2, F3, F4, F6, F7, K2, satellite_graph
from nnograph.generator import generate
from nnograph.graph import count_components, is_hamiltonian_cycle, is_hamiltonian_path
from nnograph.hamiltonicity import (DEGREE, SIZE_MISMATCH, TOO_SMALL, chvatal_cycle_condition,
                                   chvatal_path_condition, hamiltonian_cycle, hamiltonian_path)
from nnograph.nno import NNODecomposition, nno_decompose

from support import member_specs


def test_f1_cycle():
    cert = hamiltonian_cycle(nno_decompose(F1))
    assert cert.kind == "cycle"
    assert cert.sequence == ["y1", "x1", "y2", "x2", "y3", "x3"]


def test_f2_cycle_and_path():
    d = nno_decompose(F2)
    assert hamiltonian_cycle(d).sequence == ["y1", "u1", "y2", "x1", "v1", "x2", "y3", "x3"]
    assert hamiltonian_path(d).sequence == ["u1", "y1", "x2", "y2", "x3", "y3", "x1", "v1"]


def test_f3_size_mismatch_but_path():
    d = nno_decompose(F3)
    cyc = hamiltonian_cycle(d)
    assert not cyc.found
    assert cyc.violation.reason == SIZE_MISMATCH
    assert cyc.violation.separator == ["y1", "y2", "y3", "v1"]
    assert cyc.violation.component_count == 5
    path = hamiltonian_path(d)
    assert path.found and is_hamiltonian_path(F3, path.sequence)


def test_f4_no_path():
    v = hamiltonian_path(nno_decompose(F4)).violation
    assert v.reason == SIZE_MISMATCH
    assert count_components(F4, v.separator) == v.component_count == 6


@pytest.mark.parametrize("g", [F6, F7], ids=["F6", "F7"])
def test_degree_failure(g):
    d = nno_decompose(g)
    for cert, bound in ((hamiltonian_cycle(d), 3), (hamiltonian_path(d), 2)):
        v = cert.violation
        assert v.reason == DEGREE
        assert v.failing_vertex == "u2"
        assert (v.required_bound, v.actual_degree) == (bound, 1)
        assert v.separator == ["y1"] and v.component_count == 3


def test_k2():
    d = nno_decompose(K2)
    assert hamiltonian_cycle(d).violation.reason == TOO_SMALL
    assert hamiltonian_path(d).sequence in (["a", "b"], ["b", "a"])
    assert chvatal_cycle_condition(d).holds


def test_p3_is_a_size_mismatch():
    d = nno_decompose(satellite_graph(1, 2))
    assert hamiltonian_cycle(d).violation.reason == SIZE_MISMATCH


def test_chvatal_results():
    assert chvatal_cycle_condition(nno_decompose(F2)).holds
    r = chvatal_cycle_condition(nno_decompose(F3))
    assert not r.holds and count_components(F3, r.separator) == r.component_count > len(r.separator)
    assert chvatal_path_condition(nno_decompose(F3)).holds
    assert not chvatal_path_condition(nno_decompose(F6)).holds


def test_invalid_decomposition_rejected():
    d = nno_decompose(F2)
    with pytest.raises(InvalidDecomposition):
        hamiltonian_cycle(NNODecomposition(F2, d.a1, d.b1, (), ()))


@settings(max_examples=80, deadline=None)
@given(member_specs(max_side=4, max_sat=3))
def test_matches_oracle(spec):
    g = generate(spec)
    d = nno_decompose(g)
    cyc, path = hamiltonian_cycle(d), hamiltonian_path(d)
    assert cyc.found == (oracle.brute_hamiltonian_cycle(g) is not None)
    assert path.found == (oracle.brute_hamiltonian_path(g) is not None)
    if cyc.found:
        assert is_hamiltonian_cycle(g, cyc.sequence)
    elif cyc.violation.separator:
        v = cyc.violation
        assert count_components(g, v.separator) == v.component_count > len(v.separator)
    if path.found:
        assert is_hamiltonian_path(g, path.sequence)
    else:
        v = path.violation
        assert count_components(g, v.separator) == v.component_count > len(v.separator) + 1
