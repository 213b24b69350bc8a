"""Command-line entry point: edge-list in, JSON out.

Exit codes: 0 success, 1 domain error (non-member input, unmet precondition,
verify disagreement), 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from . import oracle
from .chordal import (minimum_fill_in, pathwidth, tree_decomposition, treewidth,
                      verify_tree_decomposition)
from .complement import complement_hamiltonian_cycle, complement_peo_of_graph, verify_peo
from .errors import Acyclic, GraphError
from .extremal import (longest_cycle, longest_path, min_connected_dominating_set,
                       min_leaf_spanning_tree, steiner_cycle, steiner_path)
from .generator import GenSpec, generate, mutate_break_class
from .graph import Graph, complement, parse_graph, to_edge_list
from .hamiltonicity import (chvatal_cycle_condition, chvatal_path_condition, hamiltonian_cycle,
                            hamiltonian_path)
from .nno import decompose_member, verify_nno
from .recognition import recognize
from .variants import (bipancyclic_cycles, exactly_two_path_cover, hamiltonian_connected,
                       homogeneously_traceable, path_hypohamiltonian)

GRAPH_COMMANDS = [
    "recognize", "decompose", "hc", "hp", "chvatal", "variants", "bipancyclic",
    "longest-path", "longest-cycle", "mlst", "cds", "steiner-path", "steiner-cycle",
    "treewidth", "pathwidth", "treedecomp", "fillin", "complement-peo", "complement-hc",
    "verify",
]


class UsageError(Exception):
    pass


def read_graph(source: str) -> Graph:
    if source == "-":
        return parse_graph(sys.stdin.read())
    try:
        with open(source, encoding="utf-8") as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from exc


def _terminals(args):
    if not args.terminals:
        raise UsageError("--terminals is required for Steiner queries")
    return [t for t in args.terminals.split(",") if t]


def _variants(d):
    return {
        "bipancyclic": bipancyclic_cycles(d).to_dict(),
        "homogeneously_traceable": homogeneously_traceable(d).to_dict(),
        "exactly_two_path_cover": exactly_two_path_cover(d).to_dict(),
        "hamiltonian_connected": hamiltonian_connected(d).to_dict(),
        "path_hypohamiltonian": path_hypohamiltonian(d).to_dict(),
    }


def _payload(cmd, g, args):
    if cmd == "recognize":
        return recognize(g).to_dict()
    if cmd == "complement-peo" and g.n == 1:
        return {"peo": complement_peo_of_graph(g)}
    d = decompose_member(g)
    if cmd == "decompose":
        return d.to_dict()
    if cmd == "hc":
        return hamiltonian_cycle(d).to_dict()
    if cmd == "hp":
        return hamiltonian_path(d).to_dict()
    if cmd == "chvatal":
        return {"cycle": chvatal_cycle_condition(d).to_dict(),
                "path": chvatal_path_condition(d).to_dict()}
    if cmd == "variants":
        return _variants(d)
    if cmd == "bipancyclic":
        return bipancyclic_cycles(d).to_dict()
    if cmd == "longest-path":
        return longest_path(d).to_dict()
    if cmd == "longest-cycle":
        return longest_cycle(d).to_dict()
    if cmd == "mlst":
        return min_leaf_spanning_tree(d).to_dict()
    if cmd == "cds":
        cds = min_connected_dominating_set(d)
        return {"cds": cds, "size": len(cds)}
    if cmd == "steiner-path":
        return steiner_path(d, _terminals(args)).to_dict()
    if cmd == "steiner-cycle":
        return steiner_cycle(d, _terminals(args)).to_dict()
    if cmd == "treewidth":
        return {"treewidth": treewidth(d)}
    if cmd == "pathwidth":
        w, pd = pathwidth(d)
        return {"pathwidth": w, "bags": [list(b) for b in pd.bags]}
    if cmd == "treedecomp":
        return tree_decomposition(d).to_dict()
    if cmd == "fillin":
        return minimum_fill_in(d).to_dict()
    if cmd == "complement-peo":
        return {"peo": complement_peo_of_graph(g)}
    if cmd == "complement-hc":
        return complement_hamiltonian_cycle(d).to_dict()
    if cmd == "verify":
        return verify_report(g, args.oracle_bound)
    raise UsageError(f"unknown command {cmd}")


# --- verify

def _entry(problem, constructive, oracle_value):
    agree = None if oracle_value == "skipped" else constructive == oracle_value
    return {"problem": problem, "constructive": constructive, "oracle": oracle_value,
            "agree": agree}


def _self_check(problem, ok):
    return {"problem": problem, "constructive": ok, "oracle": "self-check", "agree": ok}


def verify_report(g: Graph, oracle_bound: int | None = None) -> dict:
    """Run every construction and, within the size bounds, the matching oracle."""
    b = oracle.BOUNDS

    def run(default, fn):
        limit = default if oracle_bound is None else oracle_bound
        if g.n > limit:
            return "skipped"
        return fn(max(limit, g.n))

    d = decompose_member(g)
    rows = [_self_check("decomposition", verify_nno(g, d).ok)]
    rows.append(_entry("hc", hamiltonian_cycle(d).found,
                       run(b.max_vertices_hamiltonicity,
                           lambda n: oracle.brute_hamiltonian_cycle(g, n) is not None)))
    rows.append(_entry("hp", hamiltonian_path(d).found,
                       run(b.max_vertices_hamiltonicity,
                           lambda n: oracle.brute_hamiltonian_path(g, n) is not None)))
    rows.append(_entry("chvatal-cycle", chvatal_cycle_condition(d).holds,
                       run(b.max_vertices_chvatal, lambda n: oracle.brute_chvatal_cycle(g, n)[0])))
    rows.append(_entry("chvatal-path", chvatal_path_condition(d).holds,
                       run(b.max_vertices_chvatal, lambda n: oracle.brute_chvatal_path(g, n)[0])))
    rows.append(_entry("longest-path", longest_path(d).length,
                       run(b.max_vertices_analysis,
                           lambda n: len(oracle.brute_longest_path(g, n)))))
    try:
        lc = longest_cycle(d).length
    except Acyclic:
        lc = 0
    rows.append(_entry("longest-cycle", lc,
                       run(b.max_vertices_analysis,
                           lambda n: len(oracle.brute_longest_cycle(g, n) or []))))
    td = tree_decomposition(d)
    rows.append(_self_check("tree-decomposition", verify_tree_decomposition(g, td)[0]))
    tw = treewidth(d)
    rows.append(_entry("treewidth", tw,
                       run(b.max_vertices_widths, lambda n: oracle.brute_treewidth(g, n))))
    rows.append(_self_check("pathwidth", pathwidth(d)[0] == tw))
    rows.append(_entry("fill-in", len(minimum_fill_in(d).added_edges),
                       run(b.max_vertices_fillin, lambda n: oracle.brute_min_fill_in(g, n))))
    rows.append(_entry("mlst", min_leaf_spanning_tree(d).leaf_count,
                       run(b.max_vertices_spanning_tree,
                           lambda n: oracle.brute_min_leaf_spanning_tree(g, n)[0])))
    rows.append(_entry("cds", len(min_connected_dominating_set(d)),
                       run(b.max_vertices_analysis,
                           lambda n: len(oracle.brute_min_connected_dominating_set(g, n)))))
    cover = min(exactly_two_path_cover(d).size, 3)
    rows.append(_entry("path-cover (3 = three or more)", cover,
                       run(b.max_vertices_analysis, lambda n: oracle.brute_path_cover(g, n)[0])))
    rows.append(_entry("homogeneously-traceable", homogeneously_traceable(d).traceable,
                       run(b.max_vertices_analysis,
                           lambda n: oracle.brute_homogeneously_traceable(g, n))))

    def all_even(n):
        lens = oracle.brute_cycle_lengths(g, n)
        return g.n % 2 == 0 and g.n >= 4 and all(k in lens for k in range(4, g.n + 1, 2))

    rows.append(_entry("bipancyclic", bipancyclic_cycles(d).bipancyclic,
                       run(b.max_vertices_analysis, all_even)))
    cg = complement(g)
    rows.append(_self_check("complement-peo", verify_peo(cg, complement_peo_of_graph(g))[0]))
    chc = complement_hamiltonian_cycle(d)
    if chc.applicable:
        rows.append(_entry("complement-hc", True,
                           run(b.max_vertices_hamiltonicity,
                               lambda n: oracle.brute_hamiltonian_cycle(cg, n) is not None)))
    return {"vertices": g.n, "edges": g.m, "all_agree": all(r["agree"] is not False for r in rows),
            "checks": rows}


# --- argument parsing

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nnograph",
                                     description="Algorithms for P5-free chordal bipartite graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for cmd in GRAPH_COMMANDS:
        p = sub.add_parser(cmd)
        p.add_argument("input", help="edge-list file, or - for stdin")
        p.add_argument("--json", action="store_true", help="JSON output (the default)")
        if cmd.startswith("steiner"):
            p.add_argument("--terminals", required=True, help="comma-separated vertex names")
        if cmd == "verify":
            p.add_argument("--oracle-bound", type=int, default=None,
                           help="largest vertex count handed to any oracle")
    gen = sub.add_parser("generate")
    gen.add_argument("--i", type=int, required=True)
    gen.add_argument("--j", type=int, required=True)
    gen.add_argument("--p", type=int, default=0)
    gen.add_argument("--q", type=int, default=0)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--mutate", action="store_true",
                     help="add one A2-B2 edge so the result leaves the class")
    return parser


def _emit(doc):
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on bad usage
    cmd = args.command
    try:
        if cmd == "generate":
            g = generate(GenSpec(args.i, args.j, args.p, args.q, args.seed))
            if args.mutate:
                g = mutate_break_class(g, args.seed)
            sys.stdout.write(to_edge_list(g))
            return 0
        g = read_graph(args.input)
        payload = _payload(cmd, g, args)
    except UsageError as exc:
        _emit({"command": cmd, "status": "error", "payload": None,
               "diagnostics": [str(exc)], "version": __version__})
        return 2
    except GraphError as exc:
        if cmd == "generate":
            sys.stderr.write(json.dumps(exc.to_dict()) + "\n")
            return 1
        _emit({"command": cmd, "status": "error", "payload": exc.to_dict(),
               "diagnostics": [exc.message], "version": __version__})
        return 1
    status = "ok"
    diagnostics = []
    if cmd == "verify" and not payload["all_agree"]:
        status = "error"
        diagnostics = [r["problem"] for r in payload["checks"] if r["agree"] is False]
    _emit({"command": cmd, "status": status, "payload": payload,
           "diagnostics": diagnostics, "version": __version__})
    return 0 if status == "ok" else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
