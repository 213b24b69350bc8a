"""Immutable undirected simple graphs with string vertex names."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import Disconnected, DuplicateEdge, MalformedLine, OddCycle, SelfLoop


class Graph:
    """Undirected simple graph.

    Vertices keep the order in which they were first seen; that index is the
    tie-breaker for every deterministic choice made elsewhere.
    """

    __slots__ = ("_order", "_index", "_adj", "_edges")

    def __init__(self, vertices: Iterable = (), edges: Iterable = ()):
        order = []
        adj = {}

        def add(v):
            v = str(v)
            if v not in adj:
                adj[v] = set()
                order.append(v)
            return v

        for v in vertices:
            add(v)
        elist = []
        for e in edges:
            u, v = e
            u, v = add(u), add(v)
            if u == v:
                raise SelfLoop(f"self-loop on {u!r}", vertex=u)
            if v in adj[u]:
                raise DuplicateEdge(f"edge {u} {v} listed twice", edge=[u, v])
            adj[u].add(v)
            adj[v].add(u)
            elist.append((u, v))
        self._order = tuple(order)
        self._index = {v: k for k, v in enumerate(order)}
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._edges = tuple(elist)

    @property
    def vertices(self) -> tuple:
        return self._order

    @property
    def edges(self) -> tuple:
        return self._edges

    def __len__(self):
        return len(self._order)

    def __contains__(self, v):
        return v in self._index

    def __iter__(self):
        return iter(self._order)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._adj == other._adj

    def __hash__(self):
        return hash((self._order, frozenset(frozenset(e) for e in self._edges)))

    def __repr__(self):
        return f"Graph(n={len(self)}, m={len(self._edges)})"

    @property
    def n(self) -> int:
        return len(self._order)

    @property
    def m(self) -> int:
        return len(self._edges)

    def index(self, v) -> int:
        return self._index[v]

    def neighbors(self, v) -> frozenset:
        return self._adj[v]

    def degree(self, v) -> int:
        return len(self._adj[v])

    def has_edge(self, u, v) -> bool:
        return v in self._adj.get(u, ())

    def sort(self, vs: Iterable) -> list:
        """Return the given vertices sorted by input index."""
        return sorted(vs, key=self._index.__getitem__)

    def induced(self, keep: Iterable) -> "Graph":
        """Induced subgraph; vertex and edge order follow this graph."""
        keep = set(keep)
        verts = [v for v in self._order if v in keep]
        edges = [(u, v) for u, v in self._edges if u in keep and v in keep]
        return Graph(verts, edges)

    def without(self, drop: Iterable) -> "Graph":
        drop = set(drop)
        return self.induced(v for v in self._order if v not in drop)

    def with_edges(self, extra: Iterable) -> "Graph":
        return Graph(self._order, list(self._edges) + [tuple(e) for e in extra])

    def sorted_edges(self) -> list:
        """Edges as index-sorted pairs, in lexicographic index order."""
        idx = self._index
        pairs = [tuple(sorted(e, key=idx.__getitem__)) for e in self._edges]
        return sorted(pairs, key=lambda e: (idx[e[0]], idx[e[1]]))


@dataclass(frozen=True)
class Bipartition:
    side_a: tuple
    side_b: tuple


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: one ``u v`` pair per line, ``#`` comments."""
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise MalformedLine(f"line {lineno}: expected 2 tokens, got {len(parts)}",
                                line=lineno, text=raw)
        u, v = parts
        if u == v:
            raise SelfLoop(f"line {lineno}: self-loop on {u!r}", line=lineno, vertex=u)
        key = frozenset((u, v))
        if key in seen:
            raise DuplicateEdge(f"line {lineno}: edge {u} {v} listed twice",
                                line=lineno, edge=[u, v])
        seen.add(key)
        edges.append((u, v))
    return Graph((), edges)


def to_edge_list(g: Graph) -> str:
    """Serialize in the edge-list format, preserving edge order."""
    return "".join(f"{u} {v}\n" for u, v in g.edges)


def complement(g: Graph) -> Graph:
    vs = g.vertices
    edges = [(vs[a], vs[b]) for a in range(len(vs)) for b in range(a + 1, len(vs))
             if not g.has_edge(vs[a], vs[b])]
    return Graph(vs, edges)


def connected_components(g: Graph, removed: Iterable = ()) -> list:
    """Components of ``g`` minus ``removed``, each as an index-ordered list."""
    removed = set(removed)
    seen = set(removed)
    parts = []
    for s in g.vertices:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        parts.append(g.sort(comp))
    return parts


def count_components(g: Graph, removed: Iterable = ()) -> int:
    return len(connected_components(g, removed))


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def find_bipartition(g: Graph) -> Bipartition:
    """Two-colour a connected graph; the first vertex goes to side A."""
    if len(g) == 0:
        return Bipartition((), ())
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    root = g.vertices[0]
    colour = {root: 0}
    parent = {root: None}
    depth = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in g.sort(g.neighbors(v)):
            if w not in colour:
                colour[w] = 1 - colour[v]
                parent[w] = v
                depth[w] = depth[v] + 1
                queue.append(w)
            elif colour[w] == colour[v]:
                raise OddCycle(canonical_cycle(g, _odd_cycle(v, w, parent, depth)))
    side_a = tuple(v for v in g.vertices if colour[v] == 0)
    side_b = tuple(v for v in g.vertices if colour[v] == 1)
    return Bipartition(side_a, side_b)


def _odd_cycle(a, b, parent, depth):
    left, right = [a], [b]
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    # left ends at the common ancestor; right ends there too
    return left + right[-2::-1]


def canonical_cycle(g: Graph, seq: Sequence) -> list:
    """Rotate a cycle to start at its lowest-index vertex, walking towards
    the lower-index neighbour first."""
    seq = list(seq)
    if len(seq) < 3:
        return seq
    k = min(range(len(seq)), key=lambda t: g.index(seq[t]))
    seq = seq[k:] + seq[:k]
    if g.index(seq[1]) > g.index(seq[-1]):
        seq = [seq[0]] + seq[:0:-1]
    return seq


def is_path(g: Graph, seq: Sequence) -> bool:
    if not seq or len(set(seq)) != len(seq):
        return False
    if any(v not in g for v in seq):
        return False
    return all(g.has_edge(seq[k], seq[k + 1]) for k in range(len(seq) - 1))


def is_cycle(g: Graph, seq: Sequence) -> bool:
    """Closed simple cycle given without repeating the first vertex."""
    if len(seq) < 3 or not is_path(g, seq):
        return False
    return g.has_edge(seq[-1], seq[0])


def is_hamiltonian_path(g: Graph, seq: Sequence) -> bool:
    return len(seq) == len(g) and is_path(g, seq)


def is_hamiltonian_cycle(g: Graph, seq: Sequence) -> bool:
    return len(seq) == len(g) and is_cycle(g, seq)
