"""Cycle and path variants that follow from the Hamiltonicity constructions."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GraphError
from .graph import Graph, count_components, is_connected, is_cycle, is_path
from .hamiltonicity import (HamiltonicityCertificate, hamiltonian_cycle,
                            hamiltonian_path, path_sequence_equal, path_sequence_longer_a)
from .nno import NNODecomposition, nno_decompose, require_valid

ONE = "one_path"
TWO = "two_paths"
MORE = "more_than_two"


class EmptyWitnessPool(GraphError):
    kind = "EmptyWitnessPool"


@dataclass
class CycleFamily:
    bipancyclic: bool
    cycles: dict = field(default_factory=dict)
    refutation: HamiltonicityCertificate | None = None

    def to_dict(self):
        return {"variant": "bipancyclic", "answer": self.bipancyclic,
                "witness": {str(k): v for k, v in self.cycles.items()} if self.bipancyclic
                else self.refutation.to_dict()}


def bipancyclic_cycles(d: NNODecomposition) -> CycleFamily:
    """Cycles of every even length 4..|V| as closed prefixes of the Hamiltonian cycle.

    The cycle starts at y1 and every A vertex is adjacent to y1, so each
    even-length prefix closes.
    """
    cert = hamiltonian_cycle(d)
    if not cert.found:
        return CycleFamily(False, {}, cert)
    seq = cert.sequence
    cycles = {}
    for length in range(4, len(seq) + 1, 2):
        c = seq[:length]
        if not is_cycle(d.graph, c):
            raise GraphError("prefix did not close into a cycle", length=length)
        cycles[length] = c
    return CycleFamily(True, cycles)


@dataclass
class TraceableResult:
    traceable: bool
    paths: dict = field(default_factory=dict)
    reason: str = ""

    def to_dict(self):
        return {"variant": "homogeneously_traceable", "answer": self.traceable,
                "witness": self.paths if self.traceable else {"reason": self.reason}}


def homogeneously_traceable(d: NNODecomposition) -> TraceableResult:
    """A Hamiltonian path from every start vertex, by rotating the Hamiltonian cycle."""
    cert = hamiltonian_cycle(d)
    g = d.graph
    if g.n == 2:
        a, b = g.vertices
        return TraceableResult(True, {a: [a, b], b: [b, a]})
    if not cert.found:
        return TraceableResult(False, {}, f"no Hamiltonian cycle ({cert.violation.reason})")
    seq = cert.sequence
    paths = {}
    for k in range(len(seq)):
        paths[seq[k]] = seq[k:] + seq[:k]
    return TraceableResult(True, {v: paths[v] for v in g.vertices})


@dataclass
class PathCoverResult:
    classification: str
    paths: list = field(default_factory=list)
    source: str = ""
    lower_bound: int = 1
    lower_bound_separator: list = field(default_factory=list)

    @property
    def size(self):
        return len(self.paths)

    def to_dict(self):
        return {"variant": "exactly_two_path_cover", "answer": self.classification,
                "witness": {"paths": self.paths, "source": self.source,
                            "lower_bound": self.lower_bound,
                            "lower_bound_separator": self.lower_bound_separator}}


def _construction_sequence(d: NNODecomposition):
    """The Hamiltonian-path template for the side sizes, ignoring degree conditions."""
    gap = len(d.side_a) - len(d.side_b)
    if d.p > d.j or d.q + gap > d.i:
        return None
    if gap == 0:
        return path_sequence_equal(d)
    if gap == 1:
        return path_sequence_longer_a(d)
    return None


def _split_on_non_edges(g: Graph, seq):
    pieces = [[seq[0]]]
    for a, b in zip(seq, seq[1:]):
        if g.has_edge(a, b):
            pieces[-1].append(b)
        else:
            pieces.append([b])
    return pieces


def _augmented_cover(d: NNODecomposition, a: int, b: int):
    """Cover from a Hamiltonian path after adding ``a`` dummies to B1 and ``b`` to A1.

    A B-dummy is adjacent to all of A, an A-dummy to all of B; they go first in
    the biclique orders so every satellite neighbourhood stays a prefix.
    Returns the real segments of the path, or None when the augmented graph
    fails the degree or size conditions.
    """
    g = d.graph
    da = [f"\0a{k}" for k in range(b)]
    db = [f"\0b{k}" for k in range(a)]
    side_a, side_b = len(d.side_a) + b, len(d.side_b) + a
    gap = side_a - side_b
    if gap not in (-1, 0, 1):
        return None
    if any(g.degree(u) + a < pos + (gap == -1) for pos, u in enumerate(d.a2, 1)):
        return None
    if any(g.degree(v) + b < pos + (gap == 1) for pos, v in enumerate(d.b2, 1)):
        return None
    edges = list(g.edges)
    edges += [(x, y) for x in da for y in list(d.side_b) + db]
    edges += [(y, x) for y in db for x in d.side_a]
    aug = Graph(list(g.vertices) + da + db, edges)
    ad = NNODecomposition(aug, tuple(da) + d.a1, tuple(db) + d.b1, d.a2, d.b2)
    if gap == -1:
        ad = ad.mirror()
    seq = path_sequence_equal(ad) if gap == 0 else path_sequence_longer_a(ad)
    if not is_path(aug, seq) or len(seq) != aug.n:
        raise GraphError("augmented path construction failed", a=a, b=b)
    dummies = set(da) | set(db)
    pieces, cur = [], []
    for v in seq:
        if v in dummies:
            if cur:
                pieces.append(cur)
            cur = []
        else:
            cur.append(v)
    if cur:
        pieces.append(cur)
    return pieces


def path_cover_lower_bound(d: NNODecomposition):
    """max c(G - S) - |S| over prefix-shaped separators; every path cover is at least this."""
    g = d.graph
    best, best_sep = 1, []
    for ky in range(len(d.b1) + 1):
        for kx in range(len(d.a1) + 1):
            for kv in range(len(d.b2) + 1):
                for ku in range(len(d.a2) + 1):
                    sep = (list(d.b1[:ky]) + list(d.a1[:kx])
                           + list(d.b2[len(d.b2) - kv:]) + list(d.a2[len(d.a2) - ku:]))
                    if not sep or len(sep) == g.n:
                        continue
                    val = count_components(g, sep) - len(sep)
                    if val > best:
                        best, best_sep = val, g.sort(sep)
    return best, best_sep


def minimum_path_cover(d: NNODecomposition):
    """Smallest cover found by the split construction or dummy augmentation."""
    d = require_valid(d)
    g = d.graph
    cert = hamiltonian_path(d)
    if cert.found:
        return [cert.sequence], "hamiltonian_path"
    best, source = None, ""
    seq = _construction_sequence(d)
    if seq is not None and len(seq) == g.n:
        pieces = _split_on_non_edges(g, seq)
        if all(is_path(g, p) for p in pieces):
            best, source = pieces, "split"
    for a in range(g.n):
        for b in range(g.n):
            if best is not None and a + b + 1 >= len(best) and a + b > 1:
                continue
            pieces = _augmented_cover(d, a, b)
            if pieces is not None and (best is None or len(pieces) < len(best)):
                best, source = pieces, "augmented"
    return best, source


def exactly_two_path_cover(d: NNODecomposition) -> PathCoverResult:
    paths, source = minimum_path_cover(d)
    low, sep = path_cover_lower_bound(d)
    if len(paths) == 1:
        return PathCoverResult(ONE, paths, source, 1, [])
    if len(paths) == 2:
        return PathCoverResult(TWO, paths, source, max(low, 2), sep)
    return PathCoverResult(MORE, paths, source, low, sep)


@dataclass
class ConnectedResult:
    hamiltonian_connected: bool
    pair: tuple | None = None
    reason: str = ""

    def to_dict(self):
        return {"variant": "hamiltonian_connected", "answer": self.hamiltonian_connected,
                "witness": {"pair": list(self.pair) if self.pair else None,
                            "reason": self.reason}}


def hamiltonian_connected(d: NNODecomposition) -> ConnectedResult:
    """A pair (s, t) joined by no Hamiltonian path.

    A Hamiltonian path of a bipartite graph with |A| = |B| has one end per
    side, and with |A| = |B| + 1 both ends in A.
    """
    d = require_valid(d)
    a, b = list(d.side_a), list(d.side_b)
    if d.graph.n == 2:
        return ConnectedResult(True, None, "the single edge is a Hamiltonian path")
    if not hamiltonian_path(d).found:
        pair = (a[0], a[1]) if len(a) >= 2 else (a[0], b[0])
        return ConnectedResult(False, pair, "no Hamiltonian path at all")
    if len(a) == len(b):
        pair = (d.a2[0], d.a2[1]) if len(d.a2) >= 2 else (a[0], a[1])
        return ConnectedResult(False, pair, "both ends on one side of a balanced graph")
    if len(b) >= 2:
        return ConnectedResult(False, (b[0], b[1]), "both ends must lie on the larger side")
    return ConnectedResult(False, (a[0], b[0]), "both ends must lie on the larger side")


@dataclass
class HypoResult:
    applicable: bool
    witness: str | None = None
    source: str = ""
    reason: str = ""

    def to_dict(self):
        return {"variant": "path_hypohamiltonian",
                "answer": "not_applicable" if not self.applicable else False,
                "witness": {"vertex": self.witness, "source": self.source,
                            "reason": self.reason}}


def has_hamiltonian_path_after_removal(g: Graph, w) -> bool:
    rest = g.without([w])
    if rest.n <= 1:
        return True
    if not is_connected(rest):
        return False
    return hamiltonian_path(nno_decompose(rest)).found


def path_hypohamiltonian(d: NNODecomposition, fallback: bool = True) -> HypoResult:
    """A vertex w such that G - w still has no Hamiltonian path.

    Candidates come from B2 when |A| = |B| and from B1 and B2 otherwise,
    latest in stored order first. When none qualifies every vertex is tried
    (or EmptyWitnessPool is raised with ``fallback=False``).
    """
    d = require_valid(d)
    g = d.graph
    if hamiltonian_path(d).found:
        return HypoResult(False, None, "", "G has a Hamiltonian path")
    if len(d.side_a) == len(d.side_b):
        pool = list(reversed(d.b2))
    else:
        pool = list(reversed(d.b1)) + list(reversed(d.b2))
    for w in pool:
        if not has_hamiltonian_path_after_removal(g, w):
            return HypoResult(True, w, "pool", "G - w has no Hamiltonian path")
    if not fallback:
        raise EmptyWitnessPool("no candidate in the witness pool works", pool=pool)
    for w in g.vertices:
        if not has_hamiltonian_path_after_removal(g, w):
            return HypoResult(True, w, "exhaustive", "G - w has no Hamiltonian path")
    return HypoResult(True, None, "exhaustive", "every G - w has a Hamiltonian path")
