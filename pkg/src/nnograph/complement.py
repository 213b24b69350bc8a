"""Elimination ordering and Hamiltonian cycle for the complement of a class member."""
from __future__ import annotations

from dataclasses import dataclass, field

from .chordal import verify_peo
from .graph import Graph, complement, is_hamiltonian_cycle
from .hamiltonicity import hamiltonian_cycle
from .nno import NNODecomposition, nno_decompose, require_valid
from .oracle import (BOUNDS, brute_hamiltonian_cycle, brute_independence_number,
                     brute_vertex_connectivity)

__all__ = ["complement_peo", "complement_peo_of_graph", "verify_peo",
           "complement_hamiltonian_cycle", "ComplementCycle", "chvatal_erdos_check"]


def complement_peo(d: NNODecomposition) -> list:
    """y1..yj, vq..v1, up..u1, xi..x1.

    Both sides are cliques in the complement. A B vertex b sees the later B
    vertices and the A vertices outside N(b); those form a clique exactly
    when every later B vertex has its G-neighbourhood inside N(b), so B goes
    largest neighbourhood first (B2 by descending degree). Once B is gone
    the rest is a clique and any order works.
    """
    d = require_valid(d)
    return list(d.b1) + list(reversed(d.b2)) + list(reversed(d.a2)) + list(reversed(d.a1))


def complement_peo_of_graph(g: Graph) -> list:
    if g.n == 1:
        return list(g.vertices)
    return complement_peo(nno_decompose(g))


@dataclass
class ComplementCycle:
    applicable: bool
    sequence: list = field(default_factory=list)
    reason: str = ""
    oracle_exists: bool | None = None  # exhaustive answer when a satellite side is empty

    def to_dict(self):
        return {"kind": "cycle" if self.applicable else "not_applicable",
                "sequence": self.sequence, "reason": self.reason,
                "oracle_exists": self.oracle_exists}


def complement_hamiltonian_cycle(d: NNODecomposition,
                                 require_hamiltonian: bool = True) -> ComplementCycle:
    """Walk the A clique to a*, cross to v_q, walk the B clique to b*, cross to u_p.

    a* is a biclique vertex missed by v_q and b* one missed by u_p; both exist
    because satellites never see the whole opposite biclique side. The walk
    only needs satellites on both sides; ``require_hamiltonian=False`` drops
    the check that G itself is Hamiltonian. Without satellites on both sides
    the result is not applicable; up to 12 vertices the exhaustive answer is
    attached instead.
    """
    d = require_valid(d)
    g = d.graph
    if not d.a2 or not d.b2:
        known = None
        if g.n <= BOUNDS.max_vertices_analysis:
            known = brute_hamiltonian_cycle(complement(g), bound=g.n) is not None
        return ComplementCycle(False, [], "needs satellites on both sides", known)
    if require_hamiltonian and not hamiltonian_cycle(d).found:
        return ComplementCycle(False, [], "G is not Hamiltonian")
    up, vq = d.a2[-1], d.b2[-1]
    a_star = next(x for x in d.a1 if not g.has_edge(x, vq))
    b_star = next(y for y in d.b1 if not g.has_edge(y, up))
    others_a = [v for v in d.side_a if v not in (a_star, up)]
    others_b = [v for v in d.side_b if v not in (b_star, vq)]
    seq = others_a + [a_star, vq] + others_b + [b_star, up]
    if not is_hamiltonian_cycle(complement(g), seq):
        raise ValueError(f"complement cycle failed to validate: {seq}")
    return ComplementCycle(True, seq, "")


def chvatal_erdos_check(g: Graph, bound: int = 16) -> dict:
    """Connectivity against independence number; kappa >= alpha with n >= 3 forces a Hamiltonian cycle."""
    kappa = brute_vertex_connectivity(g, bound)
    alpha = brute_independence_number(g, bound)
    return {"connectivity": kappa, "independence": alpha,
            "implies_hamiltonian": kappa >= alpha and g.n >= 3}
