"""Exhaustive reference solvers.

Everything here works on adjacency bitmasks and never imports the
constructive modules, so it can serve as independent ground truth.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import TooLarge
from .graph import Graph


@dataclass(frozen=True)
class OracleBounds:
    max_vertices_hamiltonicity: int = 14
    max_vertices_widths: int = 10
    max_vertices_fillin: int = 9
    max_vertices_chvatal: int = 14
    max_vertices_analysis: int = 12
    max_vertices_spanning_tree: int = 10


BOUNDS = OracleBounds()


def _check(g: Graph, bound: int, what: str):
    if len(g) > bound:
        raise TooLarge(f"{what}: {len(g)} vertices exceeds the oracle bound {bound}",
                       vertices=len(g), bound=bound)


def _masks(g: Graph):
    idx = {v: k for k, v in enumerate(g.vertices)}
    adj = [0] * len(g)
    for v in g.vertices:
        for w in g.neighbors(v):
            adj[idx[v]] |= 1 << idx[w]
    return adj, idx


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask):
    return bin(mask).count("1")


def _to_mask(idx, vs):
    m = 0
    for v in vs:
        m |= 1 << idx[v]
    return m


# --- Hamiltonian paths and cycles by depth-first search with a dead-state memo

def brute_hamiltonian_cycle(g: Graph, bound: int = BOUNDS.max_vertices_hamiltonicity):
    _check(g, bound, "hamiltonian cycle")
    n = len(g)
    if n < 3:
        return None
    adj, _ = _masks(g)
    full = (1 << n) - 1
    dead = set()
    path = [0]

    def extend(mask, v):
        if mask == full:
            return bool(adj[v] & 1)
        if (mask, v) in dead:
            return False
        for w in _bits(adj[v] & ~mask):
            path.append(w)
            if extend(mask | (1 << w), w):
                return True
            path.pop()
        dead.add((mask, v))
        return False

    if extend(1, 0):
        return [g.vertices[k] for k in path]
    return None


def brute_hamiltonian_path(g: Graph, bound: int = BOUNDS.max_vertices_hamiltonicity,
                           start=None, end=None):
    """Some Hamiltonian path, optionally with fixed endpoints."""
    _check(g, bound, "hamiltonian path")
    n = len(g)
    if n == 0:
        return None
    adj, idx = _masks(g)
    full = (1 << n) - 1
    target = None if end is None else idx[end]
    dead = set()

    def extend(mask, v, path):
        if mask == full:
            return target is None or v == target
        if (mask, v) in dead:
            return False
        for w in _bits(adj[v] & ~mask):
            if w == target and (mask | (1 << w)) != full:
                continue
            path.append(w)
            if extend(mask | (1 << w), w, path):
                return True
            path.pop()
        dead.add((mask, v))
        return False

    starts = range(n) if start is None else [idx[start]]
    for s in starts:
        if n > 1 and s == target:
            continue
        path = [s]
        if extend(1 << s, s, path):
            return [g.vertices[k] for k in path]
    return None


# --- full tables of simple paths and cycles (small graphs only)

class PathTable:
    """For every vertex subset, which vertices can end a path covering it."""

    def __init__(self, g: Graph):
        self.g = g
        self.adj, self.idx = _masks(g)
        n = len(g)
        dp = [0] * (1 << n)
        for v in range(n):
            dp[1 << v] = 1 << v
        adj = self.adj
        for mask in range(1, 1 << n):
            ends = dp[mask]
            if not ends:
                continue
            for v in _bits(ends):
                for w in _bits(adj[v] & ~mask):
                    dp[mask | (1 << w)] |= 1 << w
        self.ends = dp

    def path(self, mask, end=None):
        """Reconstruct one path covering exactly ``mask``."""
        ends = self.ends[mask]
        if not ends:
            return None
        v = end if end is not None else next(_bits(ends))
        seq = [v]
        while mask != (1 << v):
            prev = mask ^ (1 << v)
            u = next(_bits(self.ends[prev] & self.adj[v]))
            seq.append(u)
            mask, v = prev, u
        return [self.g.vertices[k] for k in reversed(seq)]


class CycleTable:
    """For every subset, whether some simple cycle covers exactly it."""

    def __init__(self, g: Graph):
        self.g = g
        self.adj, self.idx = _masks(g)
        n = len(g)
        dp = [0] * (1 << n)
        for v in range(n):
            dp[1 << v] = 1 << v
        adj = self.adj
        for mask in range(1, 1 << n):
            ends = dp[mask]
            if not ends:
                continue
            low = mask & -mask
            above = ~((low << 1) - 1)
            for v in _bits(ends):
                for w in _bits(adj[v] & ~mask & above):
                    dp[mask | (1 << w)] |= 1 << w
        self.ends = dp

    def is_cycle(self, mask):
        if _popcount(mask) < 3:
            return False
        s = (mask & -mask).bit_length() - 1
        return bool(self.ends[mask] & self.adj[s])

    def cycle(self, mask):
        if not self.is_cycle(mask):
            return None
        s = (mask & -mask).bit_length() - 1
        v = next(_bits(self.ends[mask] & self.adj[s]))
        seq = [v]
        while mask != (1 << v):
            prev = mask ^ (1 << v)
            u = next(_bits(self.ends[prev] & self.adj[v]))
            seq.append(u)
            mask, v = prev, u
        return [self.g.vertices[k] for k in reversed(seq)]

    def masks(self):
        return (m for m in range(1, len(self.ends)) if self.is_cycle(m))


def _path_table(g, bound=BOUNDS.max_vertices_analysis, what="path table"):
    _check(g, bound, what)
    return PathTable(g)


def _cycle_table(g, bound=BOUNDS.max_vertices_analysis, what="cycle table"):
    _check(g, bound, what)
    return CycleTable(g)


def brute_longest_path(g: Graph, bound: int = BOUNDS.max_vertices_analysis):
    t = _path_table(g, bound, "longest path")
    best = max((m for m in range(1, len(t.ends)) if t.ends[m]), key=_popcount, default=None)
    return [] if best is None else t.path(best)


def brute_longest_cycle(g: Graph, bound: int = BOUNDS.max_vertices_analysis):
    t = _cycle_table(g, bound, "longest cycle")
    best = max(t.masks(), key=_popcount, default=None)
    return None if best is None else t.cycle(best)


def brute_cycle_lengths(g: Graph, bound: int = BOUNDS.max_vertices_analysis) -> set:
    t = _cycle_table(g, bound, "cycle lengths")
    return {_popcount(m) for m in t.masks()}


def brute_steiner_path(g: Graph, terminals, bound: int = BOUNDS.max_vertices_analysis):
    """Path through all terminals with the fewest other vertices, or None."""
    t = _path_table(g, bound, "steiner path")
    need = _to_mask(t.idx, terminals)
    cands = [m for m in range(1, len(t.ends)) if t.ends[m] and m & need == need]
    if not cands:
        return None
    return t.path(min(cands, key=_popcount))


def brute_steiner_cycle(g: Graph, terminals, bound: int = BOUNDS.max_vertices_analysis):
    t = _cycle_table(g, bound, "steiner cycle")
    need = _to_mask(t.idx, terminals)
    cands = [m for m in t.masks() if m & need == need]
    if not cands:
        return None
    return t.cycle(min(cands, key=_popcount))


def brute_path_cover(g: Graph, bound: int = BOUNDS.max_vertices_analysis):
    """Return ``(size, paths)`` where size is 1, 2, or 3 meaning "three or more"."""
    t = _path_table(g, bound, "path cover")
    n = len(g)
    full = (1 << n) - 1
    if t.ends[full]:
        return 1, [t.path(full)]
    for m in range(1, full, 2):
        rest = full ^ m
        if t.ends[m] and t.ends[rest]:
            return 2, [t.path(m), t.path(rest)]
    return 3, None


def brute_homogeneously_traceable(g: Graph, bound: int = BOUNDS.max_vertices_analysis) -> bool:
    t = _path_table(g, bound, "homogeneous traceability")
    full = (1 << len(g)) - 1
    return t.ends[full] == full


# --- widths

def _outside_reach(adj, s_mask, v):
    """Vertices outside S and v reachable from v through S."""
    seen = (1 << v)
    stack = [v]
    out = 0
    while stack:
        u = stack.pop()
        nb = adj[u] & ~seen
        seen |= nb
        out |= nb & ~s_mask
        inside = nb & s_mask
        stack.extend(_bits(inside))
    return out


def _elimination_dp(g: Graph, combine):
    adj, _ = _masks(g)
    n = len(g)
    best = [0] * (1 << n)
    best[0] = None
    for s in range(1, 1 << n):
        val = None
        for v in _bits(s):
            rest = s ^ (1 << v)
            q = _popcount(_outside_reach(adj, rest, v))
            cand = combine(best[rest], q)
            if val is None or cand < val:
                val = cand
        best[s] = val
    return best[(1 << n) - 1]


def brute_treewidth(g: Graph, bound: int = BOUNDS.max_vertices_widths) -> int:
    _check(g, bound, "treewidth")
    if len(g) == 0:
        return -1
    return _elimination_dp(g, lambda prev, q: q if prev is None else max(prev, q))


def brute_min_fill_in(g: Graph, bound: int = BOUNDS.max_vertices_fillin,
                      max_clique: int | None = None):
    """Fewest edges whose addition makes ``g`` chordal.

    With ``max_clique`` only completions whose largest clique has at most that
    many vertices count; returns None when there is none.
    """
    _check(g, bound, "minimum fill-in")
    if len(g) == 0:
        return 0
    cap = float("inf")

    def combine(prev, q):
        if max_clique is not None and q + 1 > max_clique:
            return cap
        return q if prev is None else prev + q

    total = _elimination_dp(g, combine)
    if total == cap:
        return None
    return total - g.m


# --- separators

def _component_count(adj, alive):
    count = 0
    while alive:
        low = alive & -alive
        comp = low
        frontier = low
        while frontier:
            nb = 0
            for v in _bits(frontier):
                nb |= adj[v]
            frontier = nb & alive & ~comp
            comp |= frontier
        alive &= ~comp
        count += 1
    return count


@dataclass
class ChvatalReport:
    cycle_ok: bool
    path_ok: bool
    worst_separator: list
    worst_components: int


def brute_chvatal(g: Graph, bound: int = BOUNDS.max_vertices_chvatal) -> ChvatalReport:
    """Scan every non-empty S; report whether c(G-S) <= |S| (+1) always holds."""
    _check(g, bound, "chvatal scan")
    adj, _ = _masks(g)
    n = len(g)
    full = (1 << n) - 1
    best_key, best_s, best_c = None, 0, 0
    for s in range(1, full + 1):
        c = _component_count(adj, full & ~s)
        size = _popcount(s)
        key = (c - size, -size)
        if best_key is None or key > best_key:
            best_key, best_s, best_c = key, s, c
    excess = best_key[0]
    sep = [g.vertices[k] for k in _bits(best_s)]
    return ChvatalReport(excess <= 0, excess <= 1, sep, best_c)


def brute_chvatal_cycle(g: Graph, bound: int = BOUNDS.max_vertices_chvatal):
    r = brute_chvatal(g, bound)
    return r.cycle_ok, (None if r.cycle_ok else r.worst_separator)


def brute_chvatal_path(g: Graph, bound: int = BOUNDS.max_vertices_chvatal):
    r = brute_chvatal(g, bound)
    return r.path_ok, (None if r.path_ok else r.worst_separator)


# --- domination and spanning trees

def brute_min_connected_dominating_set(g: Graph, bound: int = BOUNDS.max_vertices_analysis):
    _check(g, bound, "connected dominating set")
    adj, _ = _masks(g)
    n = len(g)
    full = (1 << n) - 1
    closed = [adj[v] | (1 << v) for v in range(n)]
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            cover = 0
            mask = 0
            for v in combo:
                cover |= closed[v]
                mask |= 1 << v
            if cover == full and _component_count(adj, mask) == 1:
                return [g.vertices[v] for v in combo]
    return []


def brute_min_leaf_spanning_tree(g: Graph, bound: int = BOUNDS.max_vertices_spanning_tree):
    """Return ``(leaf_count, tree_edges)`` minimising the number of leaves."""
    _check(g, bound, "minimum-leaf spanning tree")
    n = len(g)
    if n == 1:
        return 0, []
    hp = brute_hamiltonian_path(g, bound=max(bound, n))
    if hp is not None:
        return (2 if n > 1 else 0), list(zip(hp, hp[1:]))
    vs = g.vertices
    idx = {v: k for k, v in enumerate(vs)}
    edges = [(idx[u], idx[v]) for u, v in g.edges]
    best = [n + 1, None]
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    deg = [0] * n
    chosen = []

    def still_connected(k):
        # can edges k.. plus chosen still connect everything?
        par = list(range(n))

        def f(a):
            while par[a] != a:
                par[a] = par[par[a]]
                a = par[a]
            return a
        comps = n
        for a, b in chosen + edges[k:]:
            ra, rb = f(a), f(b)
            if ra != rb:
                par[ra] = rb
                comps -= 1
        return comps == 1

    def rec(k):
        if len(chosen) == n - 1:
            leaves = sum(1 for d in deg if d == 1)
            if leaves < best[0]:
                best[0], best[1] = leaves, list(chosen)
            return
        if k == len(edges) or best[0] == 2:
            return
        a, b = edges[k]
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            chosen.append((a, b))
            deg[a] += 1
            deg[b] += 1
            rec(k + 1)
            deg[a] -= 1
            deg[b] -= 1
            chosen.pop()
            parent[ra] = ra
        if still_connected(k + 1):
            rec(k + 1)

    rec(0)
    return best[0], [(vs[a], vs[b]) for a, b in best[1]]


# --- independence and connectivity

def brute_independence_number(g: Graph, bound: int = 16) -> int:
    _check(g, bound, "independence number")
    adj, _ = _masks(g)
    n = len(g)

    @lru_cache(maxsize=None)
    def alpha(mask):
        if not mask:
            return 0
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        return max(alpha(rest), 1 + alpha(rest & ~adj[v]))

    return alpha((1 << n) - 1)


def brute_vertex_connectivity(g: Graph, bound: int = 16) -> int:
    _check(g, bound, "vertex connectivity")
    adj, _ = _masks(g)
    n = len(g)
    full = (1 << n) - 1
    for k in range(0, n - 1):
        for combo in combinations(range(n), k):
            s = 0
            for v in combo:
                s |= 1 << v
            if _component_count(adj, full & ~s) > 1:
                return k
    return max(n - 1, 0)
