"""Tree and path decompositions, minimum fill-in and the chordal/split checks behind them."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import comb

from .errors import NotAPermutation
from .graph import Graph
from .nno import NNODecomposition, require_valid, valid_decompositions, width_bound


@dataclass
class TreeDecomposition:
    bags: list  # (id, tuple of vertices), ids are 1.. in creation order
    tree_edges: list

    @property
    def width(self) -> int:
        return max(len(b) for _, b in self.bags) - 1

    def bag(self, bag_id):
        return dict(self.bags)[bag_id]

    def to_dict(self):
        return {"bags": [{"id": k, "vertices": list(b)} for k, b in self.bags],
                "edges": [list(e) for e in self.tree_edges], "width": self.width}


@dataclass
class PathDecomposition:
    bags: list  # vertex tuples in path order

    @property
    def width(self) -> int:
        return max(len(b) for b in self.bags) - 1

    def as_tree(self) -> TreeDecomposition:
        bags = [(k + 1, b) for k, b in enumerate(self.bags)]
        return TreeDecomposition(bags, [(k, k + 1) for k in range(1, len(bags))])

    def to_dict(self):
        return {"bags": [list(b) for b in self.bags], "width": self.width}


def _oriented(d: NNODecomposition) -> NNODecomposition:
    """The decomposition whose root bag A1 + {y1..y_dUp} is the smaller one."""
    if d.i + d.d_up <= d.j + d.d_vq:
        return d
    return d.mirror()


def _bag_pieces(d: NNODecomposition):
    """Root, biclique chain, B2 bags (largest first), A2 bags (largest first)."""
    e = _oriented(d)
    g = e.graph
    root = tuple(e.a1) + tuple(e.b1[:e.d_up])
    chain = [tuple(e.a1) + (y,) for y in e.b1[e.d_up:]]
    b_bags = [(v,) + tuple(g.sort(g.neighbors(v))) for v in reversed(e.b2)]
    a_bags = [(u,) + tuple(g.sort(g.neighbors(u))) for u in reversed(e.a2)]
    return root, chain, b_bags, a_bags


def tree_decomposition(d: NNODecomposition) -> TreeDecomposition:
    """Root bag, then a chain through the rest of the biclique, satellites hung off the ends.

    Every A2 neighbourhood is a prefix of y1..y_dUp, so the A2 bags hang off the
    root as a chain; B2 neighbourhoods lie inside A1 so their chain hangs off
    the last biclique bag.
    """
    d = require_valid(d)
    root, chain, b_bags, a_bags = _bag_pieces(d)
    bags, edges = [(1, root)], []
    last = 1
    for b in chain + b_bags:
        bags.append((len(bags) + 1, b))
        edges.append((last, len(bags)))
        last = len(bags)
    last = 1
    for b in a_bags:
        bags.append((len(bags) + 1, b))
        edges.append((last, len(bags)))
        last = len(bags)
    return TreeDecomposition(bags, edges)


def path_decomposition(d: NNODecomposition) -> PathDecomposition:
    d = require_valid(d)
    root, chain, b_bags, a_bags = _bag_pieces(d)
    return PathDecomposition(list(reversed(a_bags)) + [root] + chain + b_bags)


def treewidth(d: NNODecomposition) -> int:
    return width_bound(require_valid(d))


def pathwidth(d: NNODecomposition):
    pd = path_decomposition(d)
    return pd.width, pd


def verify_tree_decomposition(g: Graph, td: TreeDecomposition):
    """Check tree shape, vertex and edge coverage and the subtree property.

    Returns ``(True, "")`` or ``(False, reason)``.
    """
    ids = [k for k, _ in td.bags]
    if len(set(ids)) != len(ids):
        return False, "duplicate bag id"
    if len(td.tree_edges) != len(ids) - 1:
        return False, "bag graph is not a tree"
    adj = {k: set() for k in ids}
    for a, b in td.tree_edges:
        if a not in adj or b not in adj:
            return False, "edge to unknown bag"
        adj[a].add(b)
        adj[b].add(a)
    seen = {ids[0]}
    queue = deque([ids[0]])
    while queue:
        k = queue.popleft()
        for m in adj[k] - seen:
            seen.add(m)
            queue.append(m)
    if len(seen) != len(ids):
        return False, "bag graph is not a tree"
    holders = {v: set() for v in g.vertices}
    for k, bag in td.bags:
        for v in bag:
            if v not in holders:
                return False, f"unknown vertex {v}"
            holders[v].add(k)
    for v, hs in holders.items():
        if not hs:
            return False, f"vertex {v} in no bag"
        start = next(iter(hs))
        reach = {start}
        queue = deque([start])
        while queue:
            k = queue.popleft()
            for m in (adj[k] & hs) - reach:
                reach.add(m)
                queue.append(m)
        if reach != hs:
            return False, f"bags holding {v} are not connected"
    bag_sets = [set(b) for _, b in td.bags]
    for a, b in g.edges:
        if not any(a in s and b in s for s in bag_sets):
            return False, f"edge {a}-{b} in no bag"
    return True, ""


def verify_path_decomposition(g: Graph, pd: PathDecomposition):
    return verify_tree_decomposition(g, pd.as_tree())


# --- fill-in

@dataclass
class FillInResult:
    added_edges: list
    embedding: Graph
    clique_side: list
    stable_side: list = field(default_factory=list)

    def to_dict(self):
        return {"added_edges": [list(e) for e in self.added_edges],
                "count": len(self.added_edges),
                "clique": self.clique_side, "stable": self.stable_side}


def fill_in_totals(d: NNODecomposition):
    """Edges needed to turn A1 + {y1..y_dUp} (resp. B1 + {x1..x_dVq}) into a clique."""
    return (comb(d.i, 2) + comb(d.d_up, 2), comb(d.j, 2) + comb(d.d_vq, 2))


def _fill_options(d: NNODecomposition):
    """(total, clique size, decomposition) for completing A1 + N(u_p), then the mirror side."""
    t_a, t_b = fill_in_totals(d)
    return [(t_a, d.i + d.d_up, d), (t_b, d.j + d.d_vq, d.mirror())]


def minimum_fill_in(d: NNODecomposition) -> FillInResult:
    """Complete the cheapest clique A1 + {y1..y_dUp} over every valid decomposition.

    What remains outside the clique is independent, so the result is a split
    graph and therefore chordal. Different maximal bicliques can give
    different totals, so all of them are tried; ties go to the smaller clique,
    then to ``d`` itself, then to side A.
    """
    d = require_valid(d)
    g = d.graph
    options = _fill_options(d)
    for other in valid_decompositions(g):
        options += _fill_options(other)
    _, _, e = min(enumerate(options), key=lambda ko: (ko[1][0], ko[1][1], ko[0]))[1]
    prefix = e.b1[:e.d_up] if e.a2 else e.b1[:1]
    clique = list(e.a1) + list(prefix)
    added = []
    for group in (e.a1, prefix):
        for k, a in enumerate(group):
            for b in group[k + 1:]:
                added.append(tuple(sorted((a, b))))
    added.sort()
    emb = g.with_edges(added)
    cl = set(clique)
    return FillInResult(added, emb, g.sort(clique), [v for v in g.vertices if v not in cl])


# --- chordality, elimination orderings, split graphs

def _is_clique(g: Graph, vs) -> bool:
    vs = list(vs)
    return all(g.has_edge(a, b) for k, a in enumerate(vs) for b in vs[k + 1:])


def verify_peo(g: Graph, order):
    """``(True, None)`` if every vertex's later neighbours form a clique, else ``(False, position)``.

    Positions are 1-based.
    """
    order = [str(v) for v in order]
    if len(order) != g.n or set(order) != set(g.vertices):
        raise NotAPermutation("ordering is not a permutation of the vertices",
                              expected=g.n, got=len(order))
    pos = {v: k for k, v in enumerate(order)}
    for k, v in enumerate(order):
        later = [w for w in g.neighbors(v) if pos[w] > k]
        if not _is_clique(g, later):
            return False, k + 1
    return True, None


def _chordless_cycle(h: Graph):
    """A chordless cycle of length >= 4 in a graph with no simplicial vertex."""
    for v in h.vertices:
        nb = h.sort(h.neighbors(v))
        for k, a in enumerate(nb):
            for b in nb[k + 1:]:
                if h.has_edge(a, b):
                    continue
                blocked = (set(nb) | {v}) - {a, b}
                prev = {a: None}
                queue = deque([a])
                while queue and b not in prev:
                    x = queue.popleft()
                    for w in h.sort(h.neighbors(x)):
                        if w not in prev and w not in blocked:
                            prev[w] = x
                            queue.append(w)
                if b in prev:
                    path = [b]
                    while prev[path[-1]] is not None:
                        path.append(prev[path[-1]])
                    return [v] + list(reversed(path))
    return None


def is_chordal(g: Graph):
    """``(True, peo)`` or ``(False, chordless cycle)``; simplicial vertices taken by input index."""
    order = []
    alive = list(g.vertices)
    while alive:
        h = g.induced(alive)
        for v in alive:
            if _is_clique(h, h.neighbors(v)):
                order.append(v)
                alive.remove(v)
                break
        else:
            return False, _chordless_cycle(h)
    return True, order


def is_split(g: Graph):
    """``(True, clique, stable)`` or ``(False, None, None)`` via the degree-sequence test."""
    vs = sorted(g.vertices, key=lambda v: (-g.degree(v), g.index(v)))
    degs = [g.degree(v) for v in vs]
    m = 0
    for k, dg in enumerate(degs, start=1):
        if dg >= k - 1:
            m = k
    if sum(degs[:m]) != m * (m - 1) + sum(degs[m:]):
        return False, None, None
    clique, stable = g.sort(vs[:m]), g.sort(vs[m:])
    if not _is_clique(g, clique) or any(g.has_edge(a, b) for k, a in enumerate(stable)
                                        for b in stable[k + 1:]):
        return False, None, None
    return True, clique, stable
