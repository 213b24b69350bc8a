"""Small named graphs used by the tests, the docs and the CLI examples."""
from .graph import Graph


def biclique_edges(xs, ys):
    return [(x, y) for x in xs for y in ys]


def _names(prefix, count):
    return [f"{prefix}{k}" for k in range(1, count + 1)]


def satellite_graph(i, j, a_side=(), b_side=()):
    """K(i,j) on x1..xi / y1..yj plus satellites with prefix neighbourhoods.

    ``a_side`` lists the degree of each u-satellite (attached to y1..yd) and
    ``b_side`` the degree of each v-satellite (attached to x1..xd).
    """
    xs, ys = _names("x", i), _names("y", j)
    edges = biclique_edges(xs, ys)
    for k, d in enumerate(a_side, 1):
        edges += [(f"u{k}", y) for y in ys[:d]]
    for k, d in enumerate(b_side, 1):
        edges += [(f"v{k}", x) for x in xs[:d]]
    return Graph((), edges)


F1 = satellite_graph(3, 3)
F2 = satellite_graph(3, 3, a_side=[2], b_side=[2])
F3 = satellite_graph(3, 3, a_side=[2, 1], b_side=[2])
F4 = satellite_graph(3, 3, a_side=[2, 1, 1], b_side=[2])
F5 = satellite_graph(4, 4, a_side=[2, 3])
F6 = satellite_graph(3, 3, a_side=[1, 1], b_side=[2])
F7 = satellite_graph(3, 3, a_side=[1, 1], b_side=[2, 1])
# i = j = 5 with d(u_p) = d(v_q) = 3 and three satellites per side: the root bag has
# 8 vertices and treewidth is exactly 7 (with one B-satellite a 6-wide choice exists)
TRACE = satellite_graph(5, 5, a_side=[1, 2, 3], b_side=[1, 2, 3])

FIXTURES = {"F1": F1, "F2": F2, "F3": F3, "F4": F4, "F5": F5, "F6": F6, "F7": F7,
            "TRACE": TRACE}


def cycle_graph(n, prefix="c"):
    vs = _names(prefix, n)
    return Graph(vs, [(vs[k], vs[(k + 1) % n]) for k in range(n)])


def path_graph(n, prefix="p"):
    vs = _names(prefix, n)
    return Graph(vs, [(vs[k], vs[k + 1]) for k in range(n - 1)])


def star_graph(leaves):
    return Graph((), [("c", f"l{k}") for k in range(1, leaves + 1)])


C4 = cycle_graph(4)
C6 = cycle_graph(6)
# chord c1-c4 splits the hexagon into two squares
C6_CHORD = C6.with_edges([("c1", "c4")])
P5 = path_graph(5)
K2 = Graph((), [("a", "b")])
TRIANGLE = Graph((), [("a", "b"), ("b", "c"), ("c", "a")])
STAR3 = star_graph(3)
K4 = Graph((), [(a, b) for k, a in enumerate("abcd") for b in "abcd"[k + 1:]])
