"""Membership test for connected P5-free chordal bipartite graphs."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotBipartite, OddCycle
from .graph import Graph, canonical_cycle, connected_components, find_bipartition

MEMBER = "Member"
NOT_CONNECTED = "NotConnected"
NOT_BIPARTITE = "NotBipartite"
INDUCED_P5 = "InducedP5"
LONG_INDUCED_CYCLE = "LongInducedCycle"


@dataclass
class RecognitionReport:
    is_member: bool
    failure_kind: str | None = None
    witness: list = field(default_factory=list)

    def to_dict(self):
        return {"member": self.is_member, "failure": self.failure_kind,
                "witness": list(self.witness)}


def find_induced_path(g: Graph, length: int):
    """First induced path on ``length`` vertices in index order, or None."""
    order = g.vertices

    def grow(path, blocked):
        if len(path) == length:
            return list(path)
        last = path[-1]
        for w in g.sort(g.neighbors(last)):
            if w in blocked:
                continue
            # w may touch the path only at its last vertex
            if any(g.has_edge(w, p) for p in path[:-1]):
                continue
            path.append(w)
            found = grow(path, blocked | {w})
            if found:
                return found
            path.pop()
        return None

    for s in order:
        found = grow([s], {s})
        if found:
            return found
    return None


def is_p5_free(g: Graph):
    """Return ``(True, [])`` or ``(False, path)`` with an induced P5 in path order."""
    path = find_induced_path(g, 5)
    return (path is None), (path or [])


def find_long_induced_cycle(g: Graph, min_length: int = 6):
    """Some chordless cycle with at least ``min_length`` vertices, or None.

    Enumerates induced paths whose first vertex has the smallest index on
    the path; a path closes into a chordless cycle when its last vertex sees
    the first and nothing else on the path.
    """
    idx = g.index
    for s in g.vertices:
        si = idx(s)

        def grow(path, on_path):
            last = path[-1]
            for w in g.sort(g.neighbors(last)):
                if w in on_path or idx(w) < si:
                    continue
                touches = [p for p in path[:-1] if g.has_edge(w, p)]
                if not touches:
                    path.append(w)
                    on_path.add(w)
                    found = grow(path, on_path)
                    if found:
                        return found
                    on_path.discard(w)
                    path.pop()
                elif touches == [s] and len(path) + 1 >= min_length and len(path) >= 2:
                    return path + [w]
            return None

        found = grow([s], {s})
        if found:
            return canonical_cycle(g, found)
    return None


def is_chordal_bipartite(g: Graph):
    """Return ``(True, [])`` or ``(False, cycle)`` for a bipartite graph."""
    try:
        for comp in connected_components(g):
            find_bipartition(g.induced(comp))
    except OddCycle as exc:
        raise NotBipartite("chordal bipartiteness needs a bipartite graph",
                           cycle=exc.cycle) from exc
    cycle = find_long_induced_cycle(g, 6)
    return (cycle is None), (cycle or [])


def recognize(g: Graph) -> RecognitionReport:
    comps = connected_components(g)
    if len(comps) != 1:
        witness = [comps[0][0], comps[1][0]] if len(comps) > 1 else []
        return RecognitionReport(False, NOT_CONNECTED, witness)
    try:
        find_bipartition(g)
    except OddCycle as exc:
        return RecognitionReport(False, NOT_BIPARTITE, exc.cycle)
    ok, cycle = is_chordal_bipartite(g)
    if not ok:
        return RecognitionReport(False, LONG_INDUCED_CYCLE, cycle)
    ok, path = is_p5_free(g)
    if not ok:
        return RecognitionReport(False, INDUCED_P5, path)
    return RecognitionReport(True, None, [])


def check_witness(g: Graph, report: RecognitionReport) -> bool:
    """Re-verify a rejection witness directly against the adjacency."""
    w = report.witness
    kind = report.failure_kind
    if kind is None:
        return report.is_member
    if kind == INDUCED_P5:
        if len(w) != 5 or len(set(w)) != 5:
            return False
        for a in range(5):
            for b in range(a + 1, 5):
                if g.has_edge(w[a], w[b]) != (b == a + 1):
                    return False
        return True
    if kind == LONG_INDUCED_CYCLE:
        k = len(w)
        if k < 6 or len(set(w)) != k:
            return False
        for a in range(k):
            for b in range(a + 1, k):
                adjacent = (b == a + 1) or (a == 0 and b == k - 1)
                if g.has_edge(w[a], w[b]) != adjacent:
                    return False
        return True
    if kind == NOT_BIPARTITE:
        k = len(w)
        return k % 2 == 1 and len(set(w)) == k and all(
            g.has_edge(w[t], w[(t + 1) % k]) for t in range(k))
    if kind == NOT_CONNECTED:
        if len(w) < 2:
            return len(g) == 0
        comp = next(c for c in connected_components(g) if w[0] in c)
        return w[1] not in comp
    return False
