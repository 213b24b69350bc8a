"""Shared corpus cache and small checking helpers for the test modules."""
from functools import lru_cache

from nnograph.generator import corpus
from nnograph.graph import count_components
from nnograph.nno import nno_decompose


@lru_cache(maxsize=None)
def instances(max_vertices=14, seeds=500):
    """(spec, graph, decomposition) for sweep seeds 1..seeds."""
    out = []
    for spec, g in corpus(range(1, seeds + 1), max_vertices=max_vertices):
        out.append((spec, g, nno_decompose(g)))
    return tuple(out)


def small(limit, max_vertices=14):
    return [t for t in instances(max_vertices) if t[1].n <= limit]


def separator_recounts(g, sep, count):
    return bool(sep) and count_components(g, sep) == count


def member_specs(max_side=5, max_sat=3):
    """Hypothesis strategy for valid generator specs."""
    from hypothesis import strategies as st

    from nnograph.generator import GenSpec

    @st.composite
    def build(draw):
        i = draw(st.integers(1, max_side))
        j = draw(st.integers(1, max_side))
        p = draw(st.integers(0, max_sat)) if j >= 2 else 0
        q = draw(st.integers(0, max_sat)) if i >= 2 else 0
        return GenSpec(i, j, p, q, draw(st.integers(0, 99_999)))

    return build()


def hamiltonian_specs():
    """Shapes with i + p = j + q whose satellites meet the degree threshold."""
    from nnograph.generator import GenSpec

    out = []
    for i in range(2, 6):
        for j in range(2, 6):
            for p in range(1, 4):
                q = i + p - j
                if q < 1 or p > j - 1 or q > i - 1:
                    continue
                for shift in range(2):
                    a_deg = [min(g + 1 + shift, j - 1) for g in range(1, p + 1)]
                    b_deg = [min(h + 1 + shift, i - 1) for h in range(1, q + 1)]
                    if any(d < k + 1 for k, d in enumerate(a_deg, 1)):
                        continue
                    if any(d < k + 1 for k, d in enumerate(b_deg, 1)):
                        continue
                    out.append(GenSpec(i, j, p, q, 0, tuple(a_deg), tuple(b_deg)))
    return out


# acceptance lines collected for the terminal summary
ACCEPTANCE = []


def report(number, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    ACCEPTANCE.append(line)
    print(line)
    return ok
