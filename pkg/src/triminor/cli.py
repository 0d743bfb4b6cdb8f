"""Batch front door: every operation and named check as a subcommand over
graph6 input.

Reports stream to stdout as one JSON record per line (fields: check, input,
verdict, witness, millis); diagnostics go to stderr; corpora are plain
graph6 lines.  Exit status: 0 all pass, 1 a checked claim failed (the
offending record carries the witness), 2 usage error.  Timing fields are
zeroed unless --timing is given, so identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .coloring import chromatic_number
from .generate import GenSpec, generate
from .graph6 import parse_graph6, write_graph6
from .graphs import Graph
from .minors import has_clique_minor, has_minor
from .reports import ReportLine, emit_report
from .rigidity import stress_space_dim
from .verify import CHECK_IDS, density_verdict, run_check


def _read_graphs(token: str) -> list[Graph]:
    """Input is a file path, '-' for stdin, or an inline graph6 string."""
    if token == "-":
        lines = sys.stdin.read().splitlines()
    elif Path(token).exists():
        lines = Path(token).read_text().splitlines()
    else:
        lines = [token]
    graphs = []
    for raw in lines:
        head = raw.split()[0] if raw.split() else ""
        if head:
            graphs.append(parse_graph6(head))
    if not graphs:
        raise ValueError(f"no graphs found in input {token!r}")
    return graphs


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="triminor",
        description="exact minor / triangle checks over graph6 inputs",
    )
    top.add_argument("--timing", action="store_true",
                     help="emit real wall-clock millis instead of 0")
    sub = top.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="isomorph-free exhaustive generation")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--min-degree", type=int, default=0)
    gen.add_argument("--prune", default="none",
                     choices=["none", "K4", "K5", "K6", "K7", "K8"])
    gen.add_argument("--max-edges", type=int, default=None)
    gen.add_argument("--count-only", action="store_true")
    gen.add_argument("--out", default=None, help="corpus file (default stdout)")

    minor = sub.add_parser("minor", help="exact minor containment with witness")
    minor.add_argument("--pattern", required=True,
                       help="K3..K8 or an inline graph6 pattern")
    minor.add_argument("input", help="graph6 file, inline string, or -")

    tri = sub.add_parser("triangles", help="minimum triangles per qualifying edge")
    tri.add_argument("--cap", type=int, default=None,
                     help="only edges with an endpoint of degree <= cap")
    tri.add_argument("input")

    ver = sub.add_parser("verify", help="run a named structural check")
    ver.add_argument("--check", required=True, choices=list(CHECK_IDS))
    ver.add_argument("--n", type=int, default=None, help="size parameter")
    ver.add_argument("--samples", type=int, default=None)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--workers", type=int, default=1)

    rig = sub.add_parser("rigidity", help="generic stress-space dimension")
    rig.add_argument("--d", type=int, required=True)
    rig.add_argument("--trials", type=int, default=3)
    rig.add_argument("--seed", type=int, default=0)
    rig.add_argument("input")

    chroma = sub.add_parser("chroma", help="exact chromatic number")
    chroma.add_argument("input")

    dens = sub.add_parser("density", help="triangle-density premise/conclusion")
    dens.add_argument("--k", type=int, required=True)
    dens.add_argument("input")

    return top


def _cmd_gen(args) -> tuple[list[ReportLine], list[str]]:
    spec = GenSpec(args.n, args.min_degree, args.prune, args.max_edges)
    if args.count_only:
        count = sum(1 for _ in generate(spec))
        return [ReportLine("gen", f"n={args.n}", "witness", {"count": count})], []
    return [], [write_graph6(g) for g in generate(spec)]


def _cmd_minor(args) -> list[ReportLine]:
    if args.pattern.startswith("K") and args.pattern[1:].isdigit():
        r = int(args.pattern[1:])
        find = lambda g: has_clique_minor(g, r)
        pattern_id = args.pattern
    else:
        pattern = parse_graph6(args.pattern)
        find = lambda g: has_minor(g, pattern)
        pattern_id = args.pattern
    out = []
    for g in _read_graphs(args.input):
        w = find(g)
        payload = {
            "pattern": pattern_id,
            "result": "none" if w is None else "minor",
        }
        if w is not None:
            payload["branch_sets"] = [sorted(s) for s in w.branch_sets]
        out.append(ReportLine("minor", write_graph6(g), "witness", payload))
    return out


def _cmd_triangles(args) -> list[ReportLine]:
    from .graphs import min_triangle_edge

    out = []
    for g in _read_graphs(args.input):
        rep = min_triangle_edge(g, args.cap)
        out.append(ReportLine(
            "triangles", write_graph6(g), "witness",
            {"min_count": rep.min_count, "edge": list(rep.edge),
             "degree_cap": rep.degree_cap},
        ))
    return out


def _cmd_verify(args) -> list[ReportLine]:
    params = {"seed": args.seed, "workers": args.workers}
    if args.n is not None:
        params["n"] = args.n
    if args.samples is not None:
        params["samples"] = args.samples
    return run_check(args.check, **params)


def _cmd_rigidity(args) -> list[ReportLine]:
    out = []
    for g in _read_graphs(args.input):
        v = stress_space_dim(g, args.d, seed=args.seed, trials=args.trials)
        out.append(ReportLine(
            "rigidity", write_graph6(g), "witness",
            {"verdict": v.verdict, "dim": v.dim, "trials": v.trials,
             "prime": v.prime, "error_bound": v.error_bound},
        ))
    return out


def _cmd_chroma(args) -> list[ReportLine]:
    out = []
    for g in _read_graphs(args.input):
        r = chromatic_number(g)
        out.append(ReportLine("chroma", write_graph6(g), "witness",
                              {"chi": r.chi, "coloring": list(r.coloring)}))
    return out


def _cmd_density(args) -> list[ReportLine]:
    out = []
    for g in _read_graphs(args.input):
        v = density_verdict(g, args.k)
        out.append(ReportLine(
            "density", write_graph6(g), "witness",
            {"k": args.k, "premise": v.premise, "conclusion": v.conclusion,
             "triangles": v.triangles, "edges": v.edges},
        ))
    return out


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    corpus_lines: list[str] = []
    try:
        if args.command == "gen":
            lines, corpus_lines = _cmd_gen(args)
        elif args.command == "minor":
            lines = _cmd_minor(args)
        elif args.command == "triangles":
            lines = _cmd_triangles(args)
        elif args.command == "verify":
            lines = _cmd_verify(args)
        elif args.command == "rigidity":
            lines = _cmd_rigidity(args)
        elif args.command == "chroma":
            lines = _cmd_chroma(args)
        else:
            lines = _cmd_density(args)
    except (ValueError, OSError) as exc:
        print(f"triminor: {exc}", file=sys.stderr)
        return 2
    if corpus_lines:
        text = "".join(line + "\n" for line in corpus_lines)
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
    emit_report(lines, sys.stdout, timing=args.timing)
    return 1 if any(l.verdict == "fail" for l in lines) else 0


if __name__ == "__main__":
    sys.exit(main())
