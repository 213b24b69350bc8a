"""The nine end-to-end acceptance checks.

Each test prints one PASS/FAIL line (also repeated in the pytest terminal
summary). Ground truth comes from the exhaustive solvers in nnograph.oracle.
"""
import random

from nnograph import oracle
from nnograph.chordal import (is_chordal, is_split, minimum_fill_in, pathwidth,
                              tree_decomposition, treewidth, verify_peo,
                              verify_tree_decomposition)
from nnograph.complement import complement_hamiltonian_cycle, complement_peo
from nnograph.errors import Acyclic
from nnograph.extremal import (LEMMA_PATTERNS, longest_cycle, longest_path,
                               min_leaf_spanning_tree, steiner_cycle, steiner_path,
                               terminal_pattern)
from nnograph.generator import generate, mutate_break_class
from nnograph.graph import (complement, count_components, is_cycle, is_hamiltonian_cycle,
                            is_hamiltonian_path, is_path)
from nnograph.hamiltonicity import (chvatal_cycle_condition, chvatal_path_condition,
                                   hamiltonian_cycle, hamiltonian_path)
from nnograph.nno import nno_decompose
from nnograph.recognition import check_witness, recognize
from nnograph.variants import (MORE, ONE, TWO, bipancyclic_cycles, exactly_two_path_cover,
                               hamiltonian_connected, homogeneously_traceable,
                               path_hypohamiltonian)

from support import hamiltonian_specs, instances, report, small

TERMINAL_SETS_PER_CLASS = 200


def finish(number, failures, checked, what):
    ok = not failures and checked > 0
    detail = f"{checked} {what}"
    if failures:
        detail += f"; {len(failures)} failures, first: {failures[0]}"
    report(number, ok, detail)
    assert ok, detail


def test_criterion_1_hamiltonicity():
    failures = []
    corpus = instances()
    for spec, g, d in corpus:
        for cert, brute, valid, allowance in (
                (hamiltonian_cycle(d), oracle.brute_hamiltonian_cycle, is_hamiltonian_cycle, 0),
                (hamiltonian_path(d), oracle.brute_hamiltonian_path, is_hamiltonian_path, 1)):
            exists = brute(g) is not None
            if cert.found != exists:
                failures.append((spec.seed, cert.kind))
            elif cert.found and not valid(g, cert.sequence):
                failures.append((spec.seed, "sequence"))
            elif not cert.found and cert.violation.separator:
                v = cert.violation
                c = count_components(g, v.separator)
                if c != v.component_count or c <= len(v.separator) + allowance:
                    failures.append((spec.seed, "separator"))
    finish(1, failures, len(corpus), "instances, cycle and path existence match the oracle")


def test_criterion_2_chvatal():
    failures = []
    corpus = instances()
    for spec, g, d in corpus:
        truth = oracle.brute_chvatal(g)
        for res, ok, allowance in ((chvatal_cycle_condition(d), truth.cycle_ok, 0),
                                   (chvatal_path_condition(d), truth.path_ok, 1)):
            if res.holds != ok:
                failures.append((spec.seed, "boolean"))
            elif not res.holds:
                c = count_components(g, res.separator)
                if c != res.component_count or c <= len(res.separator) + allowance:
                    failures.append((spec.seed, "recount"))
    finish(2, failures, len(corpus), "instances, cycle and path conditions match the scan")


def test_criterion_3_treewidth():
    failures = []
    pool = small(10)
    empty_sides = 0
    for spec, g, d in pool:
        td = tree_decomposition(d)
        tw = treewidth(d)
        empty_sides += not d.a2 or not d.b2
        if tw != oracle.brute_treewidth(g):
            failures.append((spec.seed, "treewidth"))
        if not verify_tree_decomposition(g, td)[0] or td.width != tw:
            failures.append((spec.seed, "decomposition"))
        if pathwidth(d)[0] != tw:
            failures.append((spec.seed, "pathwidth"))
    finish(3, failures, len(pool),
           f"instances with |V| <= 10 ({empty_sides} with an empty satellite side)")


def test_criterion_4_fill_in():
    failures = []
    pool = small(9)
    for spec, g, d in pool:
        f = minimum_fill_in(d)
        if len(f.added_edges) != oracle.brute_min_fill_in(g):
            failures.append((spec.seed, "count"))
        if not is_chordal(f.embedding)[0] or not is_split(f.embedding)[0]:
            failures.append((spec.seed, "embedding"))
        if len(f.clique_side) != treewidth(d) + 1:
            failures.append((spec.seed, "clique size"))
    finish(4, failures, len(pool), "instances with |V| <= 9")


def test_criterion_5_longest():
    failures = []
    pool = small(12)
    for spec, g, d in pool:
        lp = longest_path(d)
        if not is_path(g, lp.sequence) or lp.length != len(oracle.brute_longest_path(g)):
            failures.append((spec.seed, "path"))
        best = oracle.brute_longest_cycle(g)
        try:
            lc = longest_cycle(d)
            if best is None or not is_cycle(g, lc.sequence) or lc.length != len(best):
                failures.append((spec.seed, "cycle"))
        except Acyclic:
            if best is not None:
                failures.append((spec.seed, "acyclic"))
        t = min_leaf_spanning_tree(d)
        expected = 2 + (g.n - lp.length) if g.n > 1 else 0
        if t.leaf_count != expected:
            failures.append((spec.seed, "leaf formula"))
        if g.n <= 10 and t.leaf_count != oracle.brute_min_leaf_spanning_tree(g)[0]:
            failures.append((spec.seed, "leaf oracle"))
    finish(5, failures, len(pool), "instances with |V| <= 12")


def _pattern_class(pattern):
    for lemma in LEMMA_PATTERNS:
        if pattern == lemma:
            return "+".join(sorted(lemma))
    return "mixed"


class _Tables:
    """Oracle path/cycle tables per graph, reused across terminal sets."""

    def __init__(self, g):
        pt, ct = oracle.PathTable(g), oracle.CycleTable(g)
        self.idx = pt.idx
        self.paths = [m for m in range(1, len(pt.ends)) if pt.ends[m]]
        self.cycles = list(ct.masks())

    def best(self, terms, cycle):
        need = 0
        for t in terms:
            need |= 1 << self.idx[t]
        sizes = [bin(m).count("1") for m in (self.cycles if cycle else self.paths)
                 if m & need == need]
        return min(sizes) - len(terms) if sizes else None


def test_criterion_6_steiner():
    rng = random.Random(20240601)
    pool = [t for t in small(12) if t[1].n >= 3]
    tables = {}
    classes = ["+".join(sorted(p)) for p in LEMMA_PATTERNS] + ["mixed"]
    counts = {c: 0 for c in classes}
    failures = []
    attempts = 0
    while min(counts.values()) < TERMINAL_SETS_PER_CLASS and attempts < 200_000:
        attempts += 1
        want = classes[attempts % len(classes)]
        if counts[want] >= TERMINAL_SETS_PER_CLASS:
            continue
        spec, g, d = rng.choice(pool)
        parts = {"a1": d.a1, "b1": d.b1, "a2": d.a2, "b2": d.b2}
        if want == "mixed":
            names = [n for n in parts if parts[n]]
            chosen = rng.sample(names, rng.randint(2, len(names))) if len(names) >= 2 else []
        else:
            chosen = want.split("+")
        if not chosen or any(not parts[n] for n in chosen):
            continue
        terms = []
        for n in chosen:
            terms += rng.sample(parts[n], rng.randint(1, len(parts[n])))
        if _pattern_class(terminal_pattern(d, terms)) != want:
            continue
        counts[want] += 1
        tab = tables.get(spec.seed) or tables.setdefault(spec.seed, _Tables(g))
        for fn, cycle in ((steiner_path, False), (steiner_cycle, True)):
            r = fn(d, terms)
            truth = tab.best(terms, cycle)
            got = r.steiner_vertices if r.found else None
            if got != truth:
                failures.append((spec.seed, want, tuple(terms), "cycle" if cycle else "path"))
            elif r.found and not (is_cycle(g, r.sequence) if cycle else is_path(g, r.sequence)):
                failures.append((spec.seed, want, tuple(terms), "sequence"))
    short = [c for c, k in counts.items() if k < TERMINAL_SETS_PER_CLASS]
    if short:
        failures.append(("too few terminal sets", short))
    detail = ", ".join(f"{c}={k}" for c, k in counts.items())
    finish(6, failures, sum(counts.values()), f"terminal sets, path and cycle each ({detail})")


def test_criterion_7_variants():
    failures = []
    pool = small(12)
    for spec, g, d in pool:
        has_hc = oracle.brute_hamiltonian_cycle(g) is not None
        fam = bipancyclic_cycles(d)
        if fam.bipancyclic != has_hc:
            failures.append((spec.seed, "bipancyclic"))
        elif fam.bipancyclic:
            lengths = sorted(fam.cycles)
            if lengths != list(range(4, g.n + 1, 2)) or not all(
                    is_cycle(g, c) and len(c) == k for k, c in fam.cycles.items()):
                failures.append((spec.seed, "cycle family"))
        if homogeneously_traceable(d).traceable != oracle.brute_homogeneously_traceable(g):
            failures.append((spec.seed, "traceable"))
        size, _ = oracle.brute_path_cover(g)
        cover = exactly_two_path_cover(d)
        if cover.classification != {1: ONE, 2: TWO, 3: MORE}[size]:
            failures.append((spec.seed, "path cover"))
        hc = hamiltonian_connected(d)
        if hc.hamiltonian_connected:
            vs = g.vertices
            if any(oracle.brute_hamiltonian_path(g, start=a, end=b) is None
                   for k, a in enumerate(vs) for b in vs[k + 1:]):
                failures.append((spec.seed, "connected claim"))
        elif oracle.brute_hamiltonian_path(g, start=hc.pair[0], end=hc.pair[1]) is not None:
            failures.append((spec.seed, "connectable pair"))
        hypo = path_hypohamiltonian(d)
        has_hp = oracle.brute_hamiltonian_path(g) is not None
        if hypo.applicable == has_hp:
            failures.append((spec.seed, "hypo applicability"))
        elif hypo.applicable:
            if hypo.witness is None or \
                    oracle.brute_hamiltonian_path(g.without([hypo.witness])) is not None:
                failures.append((spec.seed, "hypo witness"))
    finish(7, failures, len(pool), "instances with |V| <= 12")


def test_criterion_8_complement():
    failures = []
    corpus = instances()
    applicable = 0
    for spec, g, d in corpus:
        cg = complement(g)
        if not verify_peo(cg, complement_peo(d))[0]:
            failures.append((spec.seed, "peo"))
        if d.a2 and d.b2 and oracle.brute_independence_number(cg) > 2:
            failures.append((spec.seed, "independence"))
    extra = [generate(s) for s in hamiltonian_specs()]
    targets = [(g, d) for _, g, d in corpus] + [(g, nno_decompose(g)) for g in extra]
    for g, d in targets:
        r = complement_hamiltonian_cycle(d)
        if not r.applicable:
            continue
        applicable += 1
        cg = complement(g)
        if not is_hamiltonian_cycle(cg, r.sequence):
            failures.append(("cycle", g.n))
        if g.n <= 12 and oracle.brute_hamiltonian_cycle(cg) is None:
            failures.append(("oracle", g.n))
    finish(8, failures, len(corpus),
           f"elimination orders checked, {applicable} complement cycles under the hypotheses")


def test_criterion_9_recognition_duality():
    failures = []
    corpus = instances()
    mutated = 0
    for spec, g, d in corpus:
        if not recognize(g).is_member:
            failures.append((spec.seed, "rejected member"))
        if d.a2 and d.b2:
            m = mutate_break_class(g, spec.seed)
            mutated += 1
            rep = recognize(m)
            if rep.is_member or not check_witness(m, rep):
                failures.append((spec.seed, "mutation"))
    finish(9, failures, len(corpus), f"generated instances accepted, {mutated} mutations rejected")
