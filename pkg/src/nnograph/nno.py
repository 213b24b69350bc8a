"""Nested neighbourhood decomposition (A1, B1, A2, B2) of class members."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidDecomposition, NotMember, StructureViolation
from .graph import Bipartition, Graph, find_bipartition
from .recognition import recognize


@dataclass(frozen=True)
class NNODecomposition:
    """Biclique sides ``a1``/``b1`` and satellites ``a2``/``b2``.

    ``a2`` and ``b2`` are sorted by degree, so their neighbourhoods form a
    chain; ``b1`` and ``a1`` are ordered so that every satellite
    neighbourhood is a prefix of the opposite biclique side.
    """

    graph: Graph
    a1: tuple
    b1: tuple
    a2: tuple
    b2: tuple

    @property
    def i(self):
        return len(self.a1)

    @property
    def j(self):
        return len(self.b1)

    @property
    def p(self):
        return len(self.a2)

    @property
    def q(self):
        return len(self.b2)

    @property
    def side_a(self):
        return self.a1 + self.a2

    @property
    def side_b(self):
        return self.b1 + self.b2

    def deg(self, v) -> int:
        return self.graph.degree(v)

    @property
    def d_up(self) -> int:
        """Degree of the last A2 vertex; 1 when A2 is empty."""
        return self.deg(self.a2[-1]) if self.a2 else 1

    @property
    def d_vq(self) -> int:
        """Degree of the last B2 vertex; 1 when B2 is empty."""
        return self.deg(self.b2[-1]) if self.b2 else 1

    def mirror(self) -> "NNODecomposition":
        """Swap the roles of the two sides (drops the |A| >= |B| convention)."""
        return NNODecomposition(self.graph, self.b1, self.a1, self.b2, self.a2)

    def part_of(self, v) -> str:
        for name in ("a1", "b1", "a2", "b2"):
            if v in getattr(self, name):
                return name
        raise KeyError(v)

    def to_dict(self):
        return {"a1": list(self.a1), "b1": list(self.b1),
                "a2": list(self.a2), "b2": list(self.b2)}


@dataclass
class VerifyResult:
    ok: bool
    failed: str | None = None
    message: str = ""
    vertices: tuple = ()

    def __bool__(self):
        return self.ok


def maximal_bicliques(g: Graph, bip: Bipartition | None = None) -> list:
    """All maximal bicliques ``(X, Y)`` with X in side A and Y in side B.

    Every such Y is an intersection of A-side neighbourhoods, so closing
    the family of neighbourhoods under intersection enumerates them.
    """
    if bip is None:
        bip = find_bipartition(g)
    side_a = bip.side_a
    family = set()
    frontier = {frozenset(g.neighbors(a)) for a in side_a if g.neighbors(a)}
    while frontier:
        family |= frontier
        nxt = set()
        for y in frontier:
            for z in family:
                inter = y & z
                if inter and inter not in family:
                    nxt.add(inter)
        frontier = nxt
    out = []
    for y in family:
        x = [a for a in side_a if y <= g.neighbors(a)]
        out.append((tuple(x), tuple(g.sort(y))))
    key = g.index
    out.sort(key=lambda xy: (sorted(map(key, xy[0] + xy[1]))))
    return out


def _selection_key(g, xy):
    x, y = xy
    return (-len(x) * len(y), abs(len(x) - len(y)), sorted(g.index(v) for v in x + y))


def _build(g: Graph, side_a, side_b, x, y) -> NNODecomposition:
    xs, ys = set(x), set(y)
    a2 = [v for v in side_a if v not in xs]
    b2 = [v for v in side_b if v not in ys]
    by_degree = lambda v: (g.degree(v), g.index(v))  # noqa: E731
    a2.sort(key=by_degree)
    b2.sort(key=by_degree)

    def prefix_order(core, satellites):
        count = {c: 0 for c in core}
        for s in satellites:
            for w in g.neighbors(s):
                if w in count:
                    count[w] += 1
        return sorted(core, key=lambda c: (-count[c], g.index(c)))

    b1 = prefix_order(list(y), a2)
    a1 = prefix_order(list(x), b2)
    return NNODecomposition(g, tuple(a1), tuple(b1), tuple(a2), tuple(b2))


def _canonical(d: NNODecomposition) -> NNODecomposition:
    if len(d.side_b) > len(d.side_a):
        return d.mirror()
    return d


def width_bound(d: NNODecomposition) -> int:
    """min(i + d(u_p), j + d(v_q)) - 1, the width of the root-bag decomposition."""
    return min(d.i + d.d_up, d.j + d.d_vq) - 1


def fill_bound(d: NNODecomposition) -> int:
    """Edges needed to complete the cheaper of A1 + N(u_p) and B1 + N(v_q) into a clique."""
    pairs = lambda k: k * (k - 1) // 2  # noqa: E731
    return min(pairs(d.i) + pairs(d.d_up), pairs(d.j) + pairs(d.d_vq))


def valid_decompositions(g: Graph) -> list:
    """Every decomposition obtained from a maximal biclique that passes verify_nno."""
    if g.m == 0:
        return []
    bip = find_bipartition(g)
    out = []
    for x, y in maximal_bicliques(g, bip):
        if not x or not y:
            continue
        d = _canonical(_build(g, bip.side_a, bip.side_b, x, y))
        if verify_nno(g, d).ok:
            out.append(d)
    return out


def nno_decompose(g: Graph) -> NNODecomposition:
    """Decompose a connected P5-free chordal bipartite graph.

    Every maximal biclique whose partition passes the structural checks is a
    valid answer. Among them the one with the smallest width bound wins, then
    the smallest fill bound, then the most edges, the best balance and the
    lowest vertex indices. With this choice both bounds are attained.
    """
    if g.m == 0:
        raise StructureViolation("a decomposition needs at least one edge", vertices=len(g))
    bip = find_bipartition(g)
    best = None
    first_failure = None
    for x, y in maximal_bicliques(g, bip):
        if not x or not y:
            continue
        d = _canonical(_build(g, bip.side_a, bip.side_b, x, y))
        res = verify_nno(g, d)
        if not res.ok:
            if first_failure is None:
                first_failure = res
            continue
        key = (width_bound(d), fill_bound(d), _selection_key(g, (x, y)))
        if best is None or key < best[0]:
            best = (key, d)
    if best is not None:
        return best[1]
    raise StructureViolation(
        f"no maximal biclique yields a nested decomposition: {first_failure.message}",
        check=first_failure.failed, vertices=list(first_failure.vertices))


def decompose_member(g: Graph) -> NNODecomposition:
    """Recognise first, then decompose; raises NotMember with the witness."""
    report = recognize(g)
    if not report.is_member:
        raise NotMember(f"input is not a connected P5-free chordal bipartite graph "
                        f"({report.failure_kind})", failure=report.failure_kind,
                        witness=list(report.witness))
    return nno_decompose(g)


def verify_nno(g: Graph, d: NNODecomposition) -> VerifyResult:
    parts = d.a1 + d.b1 + d.a2 + d.b2
    if len(set(parts)) != len(parts) or set(parts) != set(g.vertices):
        return VerifyResult(False, "partition", "parts do not partition the vertex set")
    for name, side in (("A", d.side_a), ("B", d.side_b)):
        s = set(side)
        for v in side:
            bad = g.neighbors(v) & s
            if bad:
                return VerifyResult(False, "stable", f"side {name} has edge {v}-{min(bad)}",
                                    (v, g.sort(bad)[0]))
    for x in d.a1:
        for y in d.b1:
            if not g.has_edge(x, y):
                return VerifyResult(False, "biclique", f"{x} and {y} are not adjacent", (x, y))
    for sats, core, label in ((d.a2, d.b1, "b1"), (d.b2, d.a1, "a1")):
        cs = set(core)
        for s in sats:
            ns = g.neighbors(s)
            if not ns or not ns <= cs:
                return VerifyResult(False, "containment",
                                    f"N({s}) is not a non-empty subset of {label}", (s,))
            if ns == cs:
                return VerifyResult(False, "maximality",
                                    f"{s} is adjacent to all of {label}, so the biclique is "
                                    f"not maximal", (s,))
    for sats, core in ((d.a2, d.b1), (d.b2, d.a1)):
        for k in range(len(sats) - 1):
            if not g.neighbors(sats[k]) <= g.neighbors(sats[k + 1]):
                return VerifyResult(False, "nesting",
                                    f"N({sats[k]}) is not contained in N({sats[k + 1]})",
                                    (sats[k], sats[k + 1]))
        for s in sats:
            if set(core[:g.degree(s)]) != g.neighbors(s):
                return VerifyResult(False, "prefix",
                                    f"N({s}) is not a prefix of the stored order", (s,))
        for k in range(len(sats) - 1):
            if g.degree(sats[k]) > g.degree(sats[k + 1]):
                return VerifyResult(False, "degree-order",
                                    f"{sats[k]} has larger degree than {sats[k + 1]}",
                                    (sats[k], sats[k + 1]))
    if len(d.side_a) < len(d.side_b):
        return VerifyResult(False, "side-order", "side A is smaller than side B")
    return VerifyResult(True)


def require_valid(d: NNODecomposition) -> NNODecomposition:
    res = verify_nno(d.graph, d)
    if not res.ok:
        raise InvalidDecomposition(res.message, check=res.failed, vertices=list(res.vertices))
    return d


def is_bisplit(d: NNODecomposition) -> bool:
    """Check the stable triple (A2 u B2, A1, B1) with A1 u B1 a biclique."""
    res = verify_nno(d.graph, d)
    if not res.ok:
        raise InvalidDecomposition(res.message, check=res.failed)
    g = d.graph
    x = d.a2 + d.b2
    for k, a in enumerate(x):
        for b in x[k + 1:]:
            if g.has_edge(a, b):
                return False
    for part in (d.a1, d.b1):
        for k, a in enumerate(part):
            for b in part[k + 1:]:
                if g.has_edge(a, b):
                    return False
    return all(g.has_edge(a, b) for a in d.a1 for b in d.b1)
