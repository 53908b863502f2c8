"""Command line interface.

Exit codes: 0 success, 1 a theorem check failed, 2 the group definition
could not be parsed, 3 any other error (including the order cap).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .corpus import CorpusConfig, default_corpus, dumps, load_corpus_dir, probe_open_problem, run_corpus
from .graphs import graph_to_json, to_dot
from .group import DEFAULT_CAP, CapExceeded
from .groupdef import GroupDefinitionError, load_group_definition
from .lattice import lattice_to_json
from .perm import PermutationSyntaxError
from .theorems import FAIL, analyze, run_theorem_suite

EXIT_OK, EXIT_CHECK_FAILED, EXIT_PARSE, EXIT_INTERNAL = 0, 1, 2, 3


class _UsageError(Exception):
    pass


def _shape(report) -> str:
    if report.is_complete_bipartite:
        a = report.coloring.count(0)
        b = report.vertex_count - a
        return f", complete bipartite K_{min(a, b)},{max(a, b)}"
    return ""


def _describe(a) -> str:
    r = a.report
    girth = "infinity" if r.girth is None else r.girth
    return (f"{a.spec}: order {a.group.order}, {len(a.lattice)} subgroups; "
            f"Pi(G) has {r.vertex_count} vertices, {r.edge_count} edges{_shape(r)}; "
            f"girth {girth}, {r.component_count} component(s)")


def cmd_build(args) -> int:
    a = analyze(load_group_definition(args.file), args.cap)
    print(_describe(a))
    if args.dot:
        Path(args.dot).write_text(to_dot(a.pi, a.lattice))
    if args.json:
        Path(args.json).write_text(dumps(graph_to_json(a.spec, a.lattice, a.pi, a.report)))
    return EXIT_OK


def cmd_lattice(args) -> int:
    a = analyze(load_group_definition(args.file), args.cap)
    body = {"schema": 1, "group": str(a.spec), "subgroups": lattice_to_json(a.lattice)}
    Path(args.json).write_text(dumps(body))
    print(f"{a.spec}: {len(a.lattice)} subgroups written to {args.json}")
    return EXIT_OK


def cmd_invariants(args) -> int:
    a = analyze(load_group_definition(args.file), args.cap)
    r = a.report
    if args.json:
        print(json.dumps(r.to_dict(), sort_keys=True))
        return EXIT_OK
    print(_describe(a))
    print(f"bipartite: {r.bipartite}")
    print(f"girth: {'infinity' if r.girth is None else r.girth}")
    print(f"components: {r.component_count}")
    print(f"isolated vertices: {r.isolated}")
    print(f"regular: {r.regular_k if r.regular_k is not None else 'no'}")
    print(f"forest: {r.is_forest}")
    print(f"complete bipartite: {r.is_complete_bipartite}")
    print(f"degree sequence: {r.degree_sequence}")
    return EXIT_OK


def cmd_verify(args) -> int:
    a = analyze(load_group_definition(args.file), args.cap)
    report = run_theorem_suite(a)
    print(_describe(a))
    for c in report.checks:
        line = f"  {c['status']:<15} {c['id']}"
        if c["status"] == FAIL:
            line += f"  witness: {json.dumps(c['witness'], sort_keys=True)}"
        print(line)
    if args.json:
        Path(args.json).write_text(dumps(report.to_dict()))
    return EXIT_OK if report.all_pass else EXIT_CHECK_FAILED


def _entries(args):
    if args.default:
        return default_corpus()
    if args.dir is None:
        raise _UsageError("corpus directory or --default required")
    return load_corpus_dir(args.dir)


def cmd_corpus(args) -> int:
    config = CorpusConfig(_entries(args), cap=args.cap, parallel=args.parallel,
                          output_dir=Path(args.out) if args.out else None)
    result = run_corpus(config)
    print(result.table())
    print(f"{len(result.rows)} groups, {len(result.failures)} with failures, {len(result.errors)} errors")
    if result.errors:
        return EXIT_INTERNAL
    return EXIT_OK if result.ok else EXIT_CHECK_FAILED


def cmd_probe(args) -> int:
    candidates = probe_open_problem(CorpusConfig(_entries(args), cap=args.cap))
    print(json.dumps({"schema": 1, "candidates": candidates}, indent=2, sort_keys=True))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="primeindex", description=__doc__.splitlines()[0])
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum group order (default %(default)s)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build the prime index graph")
    p.add_argument("file")
    p.add_argument("--dot")
    p.add_argument("--json")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("lattice", help="export the subgroup lattice")
    p.add_argument("file")
    p.add_argument("--json", required=True)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("invariants", help="print graph invariants")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="print the full report as JSON")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", help="run the theorem suite on one group")
    p.add_argument("file")
    p.add_argument("--json")
    p.set_defaults(func=cmd_verify)

    for name, func in (("corpus", cmd_corpus), ("probe", cmd_probe)):
        p = sub.add_parser(name, help=f"{name} over a directory of .grp files or the default corpus")
        p.add_argument("dir", nargs="?")
        p.add_argument("--default", action="store_true")
        if name == "corpus":
            p.add_argument("--parallel", action="store_true")
            p.add_argument("--out", help="directory for per-group JSON reports")
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GroupDefinitionError, PermutationSyntaxError, _UsageError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (CapExceeded, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
