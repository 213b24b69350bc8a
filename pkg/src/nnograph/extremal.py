"""Longest paths and cycles, spanning trees with few leaves, domination and Steiner queries."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product

from .errors import Acyclic, GraphError, InvalidTerminals
from .graph import Graph, connected_components, is_connected, is_cycle, is_path
from .hamiltonicity import hamiltonian_cycle, hamiltonian_path
from .nno import NNODecomposition, nno_decompose, require_valid

PATH_MODE = "path"
CYCLE_MODE = "cycle"
FALLBACK_LIMIT = 12


class NoSteinerPath(GraphError):
    kind = "NoSteinerPath"


class NoSteinerCycle(GraphError):
    kind = "NoSteinerCycle"


@dataclass
class PruneTrace:
    mode: str
    removed: list = field(default_factory=list)  # (vertex, position, degree)
    survivors_a2: tuple = ()
    survivors_b2: tuple = ()

    def to_dict(self):
        return {"mode": self.mode, "removed": [list(r) for r in self.removed],
                "survivors_a2": list(self.survivors_a2),
                "survivors_b2": list(self.survivors_b2)}


def _prune_side(g: Graph, satellites, slack, removed):
    keep = list(satellites)
    changed = True
    while changed:
        changed = False
        for pos, s in enumerate(keep, start=1):
            if g.degree(s) < pos + slack:
                removed.append((s, pos, g.degree(s)))
                del keep[pos - 1]
                changed = True
                break
    return tuple(keep)


def prune(d: NNODecomposition, mode: str = PATH_MODE):
    """Drop satellites that break the degree threshold, relabelling after each removal.

    Path mode keeps d(u_g) >= g, cycle mode keeps d(u_g) > g, on both sides.
    Returns the trace and the decomposition of what is left.
    """
    if mode not in (PATH_MODE, CYCLE_MODE):
        raise ValueError(f"unknown prune mode {mode!r}")
    d = require_valid(d)
    g = d.graph
    slack = 0 if mode == PATH_MODE else 1
    removed = []
    a2 = _prune_side(g, d.a2, slack, removed)
    b2 = _prune_side(g, d.b2, slack, removed)
    trace = PruneTrace(mode, removed, a2, b2)
    rest = g.without([r[0] for r in removed])
    red = NNODecomposition(rest, d.a1, d.b1, a2, b2)
    if len(red.side_a) < len(red.side_b):
        red = red.mirror()
    return trace, require_valid(red)


@dataclass
class LongestResult:
    sequence: list
    pruned: list = field(default_factory=list)
    dropped: list = field(default_factory=list)

    @property
    def length(self):
        return len(self.sequence)

    def to_dict(self):
        return {"sequence": self.sequence, "length": self.length,
                "pruned": self.pruned, "dropped": self.dropped}


def _drop_one_from_a(d: NNODecomposition):
    """Remove the A vertex the construction can spare: the A2 tail, else the last of A1."""
    v = d.a2[-1] if d.a2 else d.a1[-1]
    return v, d.graph.without([v])


def longest_path(d: NNODecomposition) -> LongestResult:
    trace, cur = prune(d, PATH_MODE)
    pruned = [r[0] for r in trace.removed]
    dropped = []
    while True:
        gap = len(cur.side_a) - len(cur.side_b)
        if gap in (0, 1):
            cert = hamiltonian_path(cur)
            if cert.found:
                return LongestResult(cert.sequence, pruned, dropped)
        v, rest = _drop_one_from_a(cur)
        dropped.append(v)
        if rest.n == 1:
            return LongestResult(list(rest.vertices), pruned, dropped)
        more, cur = prune(nno_decompose(rest), PATH_MODE)
        pruned += [r[0] for r in more.removed]


def longest_cycle(d: NNODecomposition) -> LongestResult:
    trace, cur = prune(d, CYCLE_MODE)
    pruned = [r[0] for r in trace.removed]
    dropped = []
    while True:
        if cur.graph.n < 4:
            raise Acyclic("graph has no cycle", vertices=cur.graph.n)
        if len(cur.side_a) == len(cur.side_b):
            cert = hamiltonian_cycle(cur)
            if cert.found:
                return LongestResult(cert.sequence, pruned, dropped)
            raise GraphError("balanced pruned graph without Hamiltonian cycle",
                             violation=cert.violation.to_dict())
        v, rest = _drop_one_from_a(cur)
        dropped.append(v)
        if rest.n < 4:
            raise Acyclic("graph has no cycle", vertices=rest.n)
        more, cur = prune(nno_decompose(rest), CYCLE_MODE)
        pruned += [r[0] for r in more.removed]


@dataclass
class SpanningTreeResult:
    edges: list
    leaf_count: int
    path: list = field(default_factory=list)

    def to_dict(self):
        return {"edges": [list(e) for e in self.edges], "leaf_count": self.leaf_count,
                "path": self.path}


def min_leaf_spanning_tree(d: NNODecomposition) -> SpanningTreeResult:
    """Longest path plus every other vertex hung off it breadth-first."""
    g = d.graph
    path = longest_path(d).sequence
    edges = list(zip(path, path[1:]))
    seen = set(path)
    queue = deque(path)
    while queue:
        v = queue.popleft()
        for w in g.sort(g.neighbors(v)):
            if w not in seen:
                seen.add(w)
                edges.append((v, w))
                queue.append(w)
    deg = {v: 0 for v in g.vertices}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    leaves = sum(1 for v in deg if deg[v] == 1)
    return SpanningTreeResult(edges, leaves, path)


def min_connected_dominating_set(d: NNODecomposition) -> list:
    """A vertex adjacent to everything when there is one, else {x1, y1}."""
    d = require_valid(d)
    g = d.graph
    for v in (d.b1[0], d.a1[0]):
        if g.degree(v) == g.n - 1:
            return [v]
    return [d.a1[0], d.b1[0]]


# --- Steiner paths and cycles

LEMMA_PATTERNS = [{"a2"}, {"a1"}, {"a1", "b2"}, {"b2"}, {"b1"}, {"b1", "a2"}]


@dataclass
class SteinerResult:
    found: bool
    sequence: list = field(default_factory=list)
    steiner_vertices: int = 0
    source: str = ""
    witness: dict | None = None

    def to_dict(self):
        return {"found": self.found, "sequence": self.sequence,
                "steiner_vertices": self.steiner_vertices, "source": self.source,
                "witness": self.witness}


def terminal_pattern(d: NNODecomposition, terminals) -> set:
    return {d.part_of(v) for v in terminals}


def _check_terminals(d, terminals):
    g = d.graph
    terms = list(dict.fromkeys(str(t) for t in terminals))
    if not terms:
        raise InvalidTerminals("terminal set is empty")
    missing = [t for t in terms if t not in g]
    if missing:
        raise InvalidTerminals("terminals not in graph", missing=missing)
    return terms


def _ranked_candidates(d, terms):
    """Non-terminals per part, strongest neighbourhood first.

    Inside each part neighbourhoods are nested, so a Steiner vertex can always
    be swapped for a stronger unused one of the same part.
    """
    t = set(terms)
    return [
        [v for v in d.b1 if v not in t],
        [v for v in d.a1 if v not in t],
        [v for v in reversed(d.b2) if v not in t],
        [v for v in reversed(d.a2) if v not in t],
    ]


def _covering_sequence(g: Graph, keep, cycle: bool):
    h = g.induced(keep)
    if h.n == 1:
        return None if cycle else list(h.vertices)
    if not is_connected(h):
        return None
    cert = (hamiltonian_cycle if cycle else hamiltonian_path)(nno_decompose(h))
    return cert.sequence if cert.found else None


def _reduction_search(d, terms, cycle):
    g = d.graph
    parts = _ranked_candidates(d, terms)
    side_a = set(d.side_a)
    base_a = sum(1 for v in terms if v in side_a)
    base_b = len(terms) - base_a
    is_a = [False, True, False, True]
    total_max = sum(len(p) for p in parts)
    for total in range(total_max + 1):
        # larger biclique counts first: ties then favour the dense part of the graph
        for ks in product(*(range(min(len(p), total), -1, -1) for p in parts[:3])):
            k4 = total - sum(ks)
            if k4 < 0 or k4 > len(parts[3]):
                continue
            counts = list(ks) + [k4]
            na = base_a + sum(c for c, a in zip(counts, is_a) if a)
            nb = base_b + sum(c for c, a in zip(counts, is_a) if not a)
            if cycle and (na != nb or na < 2):
                continue
            if not cycle and abs(na - nb) > 1:
                continue
            extra = [v for p, c in zip(parts, counts) for v in p[:c]]
            seq = _covering_sequence(g, list(terms) + extra, cycle)
            if seq is not None:
                return seq
    return None


def _steiner_witness(d, terms, cycle):
    """A separator S leaving more terminal-holding components than a path/cycle allows."""
    g = d.graph
    if cycle:
        for t in terms:
            if g.degree(t) < 2:
                return {"reason": "terminal of degree below 2", "vertex": t}
    allow = 0 if cycle else 1
    tset = set(terms)
    for ky in range(len(d.b1) + 1):
        for kx in range(len(d.a1) + 1):
            for kv in range(len(d.b2) + 1):
                for ku in range(len(d.a2) + 1):
                    sep = (list(d.b1[:ky]) + list(d.a1[:kx])
                           + list(d.b2[len(d.b2) - kv:]) + list(d.a2[len(d.a2) - ku:]))
                    if not sep:
                        continue
                    comps = [c for c in connected_components(g, sep) if tset.intersection(c)]
                    if len(comps) > len(sep) + allow:
                        return {"reason": "separator", "separator": g.sort(sep),
                                "terminal_components": len(comps)}
    return {"reason": "no vertex set containing the terminals induces a Hamiltonian "
                      + ("cycle" if cycle else "path")}


def _steiner(d: NNODecomposition, terminals, cycle: bool) -> SteinerResult:
    d = require_valid(d)
    g = d.graph
    terms = _check_terminals(d, terminals)
    pattern = terminal_pattern(d, terms)
    lemma = any(pattern <= p for p in LEMMA_PATTERNS)
    if not lemma and g.n <= FALLBACK_LIMIT:
        from . import oracle
        seq = (oracle.brute_steiner_cycle if cycle else oracle.brute_steiner_path)(
            g, terms, bound=FALLBACK_LIMIT)
        source = "fallback"
    else:
        seq = _reduction_search(d, terms, cycle)
        source = "lemma" if lemma else "reduction"
    if seq is None:
        return SteinerResult(False, [], 0, source, _steiner_witness(d, terms, cycle))
    ok = is_cycle(g, seq) if cycle else is_path(g, seq)
    if not ok or not set(terms) <= set(seq):
        raise GraphError("Steiner construction failed to validate", sequence=seq)
    return SteinerResult(True, list(seq), len(seq) - len(terms), source)


def steiner_path(d: NNODecomposition, terminals) -> SteinerResult:
    """Path through every terminal using the fewest other vertices."""
    return _steiner(d, terminals, cycle=False)


def steiner_cycle(d: NNODecomposition, terminals) -> SteinerResult:
    """Cycle through every terminal using the fewest other vertices."""
    return _steiner(d, terminals, cycle=True)
