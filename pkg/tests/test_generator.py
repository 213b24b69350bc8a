import pytest

from nnograph.errors import InvalidSpec, NoSatellites
from nnograph.generator import (GenSpec, corpus, corpus_spec, generate, mutate_break_class,
                                satellite_degrees)
from nnograph.nno import nno_decompose
from nnograph.recognition import recognize


def test_draw_order_is_stable():
    # frozen: Random(7) gives these degrees for (i, j, p, q) = (3, 3, 1, 1)
    assert satellite_degrees(GenSpec(3, 3, 1, 1, seed=7)) == ([2], [1])


def test_explicit_degrees_reproduce_f2():
    g = generate(GenSpec(3, 3, 1, 1, seed=7, a_degrees=(2,), b_degrees=(2,)))
    d = nno_decompose(g)
    assert (d.i, d.j, d.p, d.q) == (3, 3, 1, 1)
    assert g.degree("u1") == 2 and g.degree("v1") == 2


def test_same_seed_same_graph():
    assert generate(GenSpec(4, 3, 2, 2, seed=11)) == generate(GenSpec(4, 3, 2, 2, seed=11))


@pytest.mark.parametrize("spec", [
    GenSpec(0, 3), GenSpec(3, 1, p=1), GenSpec(1, 3, q=1), GenSpec(3, 3, p=-1),
    GenSpec(3, 3, 1, 0, a_degrees=(3,)),
])
def test_invalid_specs(spec):
    with pytest.raises(InvalidSpec):
        generate(spec)


def test_corpus_is_bounded_and_deterministic():
    first = list(corpus(range(1, 51)))
    assert all(g.n <= 14 for _, g in first)
    assert [s for s, _ in first] == [corpus_spec(k) for k in range(1, 51)]


def test_mutation_needs_satellites():
    with pytest.raises(NoSatellites):
        mutate_break_class(generate(GenSpec(3, 3)), 0)


def test_mutation_leaves_class():
    g = generate(GenSpec(3, 3, 1, 1, seed=1))
    m = mutate_break_class(g, 1)
    assert m.m == g.m + 1
    assert not recognize(m).is_member
