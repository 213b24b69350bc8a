"""Hamiltonian cycles and paths from the nested decomposition.

Every answer is either a sequence built directly from the four ordered parts
or a separator S whose removal leaves too many components
(more than |S| for cycles, more than |S|+1 for paths).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidDecomposition
from .graph import count_components, is_hamiltonian_cycle, is_hamiltonian_path
from .nno import NNODecomposition, require_valid

CYCLE = "cycle"
PATH = "path"
VIOLATION = "violation"

DEGREE = "degree"
SIZE_MISMATCH = "size_mismatch"
TOO_SMALL = "too_small"


@dataclass
class Violation:
    reason: str
    separator: list = field(default_factory=list)
    component_count: int = 0
    failing_vertex: str | None = None
    required_bound: int | None = None
    actual_degree: int | None = None

    def to_dict(self):
        return {
            "reason": self.reason,
            "failing_vertex": self.failing_vertex,
            "required_bound": self.required_bound,
            "actual_degree": self.actual_degree,
            "separator": list(self.separator),
            "component_count": self.component_count,
        }


@dataclass
class HamiltonicityCertificate:
    kind: str
    sequence: list = field(default_factory=list)
    violation: Violation | None = None

    @property
    def found(self) -> bool:
        return self.kind != VIOLATION

    def to_dict(self):
        return {"kind": self.kind, "sequence": list(self.sequence),
                "violation": self.violation.to_dict() if self.violation else None}


def _first_degree_failure(d, satellites, slack):
    """Position (1-based) of a satellite with degree < position + slack.

    The first failing degree is found, then the last satellite sharing that
    degree is reported: it has the same neighbourhood and a larger position.
    """
    for pos, s in enumerate(satellites, start=1):
        if d.deg(s) < pos + slack:
            deg = d.deg(s)
            last = max(k for k, t in enumerate(satellites, start=1) if d.deg(t) == deg)
            return last, satellites[last - 1]
    return None


def _degree_violation(d, satellites, slack):
    hit = _first_degree_failure(d, satellites, slack)
    if hit is None:
        return None
    pos, s = hit
    sep = d.graph.sort(d.graph.neighbors(s))
    return Violation(DEGREE, sep, count_components(d.graph, sep), s, pos + slack, d.deg(s))


def _size_violation(d):
    sep = list(d.side_b)
    return Violation(SIZE_MISMATCH, sep, count_components(d.graph, sep))


def _strongest(candidates, allowance):
    """The witness with the largest excess c(G - S) - |S|; earlier entries win ties."""
    best = None
    for cand in candidates:
        if cand is None:
            continue
        excess = cand.component_count - len(cand.separator) - allowance
        if best is None or excess > best[0]:
            best = (excess, cand)
    return best[1] if best else None


def _checked(d: NNODecomposition) -> NNODecomposition:
    if not isinstance(d, NNODecomposition):
        raise InvalidDecomposition("expected an NNODecomposition")
    return require_valid(d)


def cycle_sequence(d: NNODecomposition) -> list:
    """The cycle y1 u1 y2 .. up y(p+1) x1 v1 .. xq vq x(q+1) y(p+2) x(q+2) .. yj xi.

    Assumes |A| = |B| and d(u_g) > g, d(v_h) > h.
    """
    x, y, u, v = d.a1, d.b1, d.a2, d.b2
    p, q = len(u), len(v)
    seq = []
    for g in range(p):
        seq += [y[g], u[g]]
    seq.append(y[p])
    for h in range(q):
        seq += [x[h], v[h]]
    seq.append(x[q])
    for yk, xk in zip(y[p + 1:], x[q + 1:]):
        seq += [yk, xk]
    return seq


def path_sequence_equal(d: NNODecomposition) -> list:
    """Path for |A| = |B|: u1 y1 .. up yp x(q+1) y(p+1) .. xi yj xq vq .. x1 v1."""
    x, y, u, v = d.a1, d.b1, d.a2, d.b2
    p, q = len(u), len(v)
    seq = []
    for g in range(p):
        seq += [u[g], y[g]]
    for xk, yk in zip(x[q:], y[p:]):
        seq += [xk, yk]
    for h in reversed(range(q)):
        seq += [x[h], v[h]]
    return seq


def path_sequence_longer_a(d: NNODecomposition) -> list:
    """Path for |A| = |B| + 1: u1 y1 .. up yp x(q+2) y(p+1) .. xi yj x(q+1) vq xq .. v1 x1."""
    x, y, u, v = d.a1, d.b1, d.a2, d.b2
    p, q = len(u), len(v)
    seq = []
    for g in range(p):
        seq += [u[g], y[g]]
    for xk, yk in zip(x[q + 1:], y[p:]):
        seq += [xk, yk]
    seq.append(x[q])
    for h in reversed(range(q)):
        seq += [v[h], x[h]]
    return seq


def hamiltonian_cycle(d: NNODecomposition) -> HamiltonicityCertificate:
    d = _checked(d)
    g = d.graph
    bad = _strongest([
        _size_violation(d) if len(d.side_a) != len(d.side_b) else None,
        _degree_violation(d, d.a2, 1),
        _degree_violation(d, d.b2, 1),
    ], 0)
    if bad is None and g.n < 4:
        # only K2 gets here: every degree condition holds but no cycle exists
        bad = Violation(TOO_SMALL, [], 1)
    if bad:
        return HamiltonicityCertificate(VIOLATION, [], bad)
    seq = cycle_sequence(d)
    if not is_hamiltonian_cycle(g, seq):
        raise InvalidDecomposition("cycle construction failed to validate", sequence=seq)
    return HamiltonicityCertificate(CYCLE, seq)


def hamiltonian_path(d: NNODecomposition) -> HamiltonicityCertificate:
    d = _checked(d)
    g = d.graph
    gap = len(d.side_a) - len(d.side_b)
    candidates = [
        _size_violation(d) if gap not in (0, 1) else None,
        _degree_violation(d, d.a2, 0),
        _degree_violation(d, d.b2, 0),
    ]
    if gap == 1:
        hit = _first_degree_failure(d, d.b2, 1)
        if hit:
            r, v = hit
            sep = list(d.b1) + list(d.b2[r:])
            candidates.append(Violation(DEGREE, sep, count_components(g, sep), v, r + 1, d.deg(v)))
    bad = _strongest(candidates, 1)
    if bad:
        return HamiltonicityCertificate(VIOLATION, [], bad)
    seq = path_sequence_equal(d) if gap == 0 else path_sequence_longer_a(d)
    if not is_hamiltonian_path(g, seq):
        raise InvalidDecomposition("path construction failed to validate", sequence=seq)
    return HamiltonicityCertificate(PATH, seq)


@dataclass
class ChvatalResult:
    holds: bool
    separator: list | None = None
    component_count: int | None = None

    def to_dict(self):
        return {"holds": self.holds, "separator": self.separator,
                "component_count": self.component_count}


def chvatal_cycle_condition(d: NNODecomposition) -> ChvatalResult:
    """c(G - S) <= |S| for every non-empty S, read off the degree conditions."""
    cert = hamiltonian_cycle(d)
    if cert.found or cert.violation.reason == TOO_SMALL:
        return ChvatalResult(True)
    return ChvatalResult(False, cert.violation.separator, cert.violation.component_count)


def chvatal_path_condition(d: NNODecomposition) -> ChvatalResult:
    """c(G - S) <= |S| + 1 for every non-empty S, read off the degree conditions."""
    cert = hamiltonian_path(d)
    if cert.found:
        return ChvatalResult(True)
    return ChvatalResult(False, cert.violation.separator, cert.violation.component_count)
