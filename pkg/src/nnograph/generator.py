"""Seeded generator of class members and class-breaking mutations.

Draw order with ``random.Random(seed)`` (Mersenne Twister, CPython's
``randint``): first the ``p`` A-satellite degrees, each uniform in
``[1, j-1]``; then the ``q`` B-satellite degrees, each uniform in
``[1, i-1]``. Both lists are then sorted ascending.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InvalidSpec, NoSatellites
from .fixtures import satellite_graph
from .graph import Graph
from .nno import nno_decompose


@dataclass(frozen=True)
class GenSpec:
    i: int
    j: int
    p: int = 0
    q: int = 0
    seed: int = 0
    a_degrees: tuple | None = None  # explicit satellite degrees skip the draw
    b_degrees: tuple | None = None

    def validate(self):
        if self.i < 1 or self.j < 1:
            raise InvalidSpec("biclique sides need at least one vertex each", i=self.i, j=self.j)
        if self.p < 0 or self.q < 0:
            raise InvalidSpec("satellite counts must be non-negative", p=self.p, q=self.q)
        if self.p > 0 and self.j < 2:
            raise InvalidSpec("A-satellites need j >= 2 (degrees are drawn from [1, j-1])",
                              j=self.j, p=self.p)
        if self.q > 0 and self.i < 2:
            raise InvalidSpec("B-satellites need i >= 2 (degrees are drawn from [1, i-1])",
                              i=self.i, q=self.q)
        for name, degs, count, top in (("a_degrees", self.a_degrees, self.p, self.j),
                                       ("b_degrees", self.b_degrees, self.q, self.i)):
            if degs is None:
                continue
            if len(degs) != count or any(not 1 <= d <= top - 1 for d in degs):
                raise InvalidSpec(f"{name} must hold {count} values in [1, {top - 1}]",
                                  degrees=list(degs))
        return self

    @property
    def n(self):
        return self.i + self.j + self.p + self.q


def satellite_degrees(spec: GenSpec):
    spec.validate()
    rng = random.Random(spec.seed)
    a_deg = sorted(rng.randint(1, spec.j - 1) for _ in range(spec.p))
    b_deg = sorted(rng.randint(1, spec.i - 1) for _ in range(spec.q))
    if spec.a_degrees is not None:
        a_deg = sorted(spec.a_degrees)
    if spec.b_degrees is not None:
        b_deg = sorted(spec.b_degrees)
    return a_deg, b_deg


def generate(spec: GenSpec) -> Graph:
    """K(i,j) on x*/y* plus satellites u*/v* attached to prefixes."""
    a_deg, b_deg = satellite_degrees(spec)
    return satellite_graph(spec.i, spec.j, a_deg, b_deg)


def corpus_spec(seed: int, max_vertices: int = 14, max_side: int = 6,
                max_satellites: int = 4) -> GenSpec:
    """Deterministic shape for sweep seed ``seed`` with at most ``max_vertices``."""
    rng = random.Random(f"corpus:{seed}:{max_vertices}")
    while True:
        i = rng.randint(1, max_side)
        j = rng.randint(1, max_side)
        p = rng.randint(0, max_satellites) if j >= 2 else 0
        q = rng.randint(0, max_satellites) if i >= 2 else 0
        if i + j + p + q <= max_vertices:
            return GenSpec(i, j, p, q, seed)


def corpus(seeds=range(1, 501), max_vertices: int = 14):
    for seed in seeds:
        spec = corpus_spec(seed, max_vertices)
        yield spec, generate(spec)


def mutate_break_class(g: Graph, seed: int = 0) -> Graph:
    """Add one edge between an A2 and a B2 vertex.

    The result always contains an induced P5 (u, v, x, y, x') where x is a
    neighbour of v, y is a biclique vertex missed by u and x' is a biclique
    vertex missed by v.
    """
    d = nno_decompose(g)
    if not d.a2 or not d.b2:
        raise NoSatellites("mutation needs satellites on both sides",
                           a2=len(d.a2), b2=len(d.b2))
    rng = random.Random(seed)
    u = rng.choice(d.a2)
    v = rng.choice(d.b2)
    return g.with_edges([(u, v)])
