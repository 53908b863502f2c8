"""Running the theorem suite over a collection of groups."""

from __future__ import annotations

import json
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .graphs import build_prime_index_graph, is_connected
from .group import DEFAULT_CAP, CapExceeded, quotient, subgroup_as_group
from .groupdef import GroupSpec, load_group_definition
from .lattice import enumerate_subgroups
from .numbers import is_prime
from .theorems import analyze, run_theorem_suite


def _abelian_invariant_forms(max_order: int, max_factors: int):
    """Factor lists ``n1 | n2 | ... `` with every ``n_i >= 2``."""
    def extend(prefix, prod):
        if len(prefix) >= 2:
            yield tuple(prefix)
        if len(prefix) == max_factors:
            return
        last = prefix[-1]
        m = last
        while prod * m <= max_order:
            yield from extend(prefix + [m], prod * m)
            m += last

    for first in range(2, max_order + 1):
        yield from extend([first], first)


def default_corpus() -> list[GroupSpec]:
    """The built-in corpus, in a fixed order."""
    C = GroupSpec.cyclic
    specs = [C(n) for n in range(1, 65)]
    for factors in sorted(_abelian_invariant_forms(128, 3), key=lambda f: (len(f), f)):
        specs.append(GroupSpec("abelian", factors))
    specs += [GroupSpec("dihedral", (n,)) for n in range(1, 25)]
    specs.append(GroupSpec("quaternion8"))
    specs += [GroupSpec("sym", (n,)) for n in range(1, 7)]
    specs += [GroupSpec("alt", (n,)) for n in range(1, 7)]
    specs += [GroupSpec("psl2", (5,)), GroupSpec("psl2", (7,))]
    primes = [p for p in range(2, 8) if is_prime(p)]
    specs += [GroupSpec.product(C(p), C(q)) for i, p in enumerate(primes) for q in primes[i:]]
    S3, A4 = GroupSpec("sym", (3,)), GroupSpec("alt", (4,))
    specs += [
        GroupSpec.product(S3, C(4)),
        GroupSpec.product(A4, C(2)),
        GroupSpec.product(S3, S3),
        GroupSpec.product(GroupSpec("alt", (5,)), C(2)),
    ]
    return specs


def load_corpus_dir(path) -> list[GroupSpec]:
    """Every ``*.grp`` file in ``path``, by file name."""
    return [load_group_definition(p) for p in sorted(Path(path).glob("*.grp"))]


@dataclass
class CorpusConfig:
    entries: list[GroupSpec]
    cap: int = DEFAULT_CAP
    parallel: bool = False
    output_dir: Path | None = None


@dataclass
class CorpusResult:
    rows: list[dict] = field(default_factory=list)
    reports: list = field(default_factory=list)
    errors: list[dict] = field(default_factory=list)

    @property
    def failures(self) -> list[dict]:
        return [r for r in self.rows if not r["all_pass"]]

    @property
    def ok(self) -> bool:
        return not self.failures and not self.errors

    def summary(self) -> dict:
        return {"schema": 1, "groups": self.rows, "errors": self.errors,
                "failures": len(self.failures), "ok": self.ok}

    def table(self) -> str:
        head = f"{'group':<34} {'order':>5} {'subgrp':>6} {'edges':>6} {'girth':>5} {'comp':>4}  all-pass"
        lines = [head, "-" * len(head)]
        for r in self.rows:
            girth = "inf" if r["girth"] is None else str(r["girth"])
            lines.append(f"{r['group']:<34} {r['order']:>5} {r['subgroups']:>6} {r['edges']:>6} "
                         f"{girth:>5} {r['components']:>4}  {'yes' if r['all_pass'] else 'NO'}")
        for e in self.errors:
            lines.append(f"{e['group']:<34} error: {e['error']}")
        return "\n".join(lines)


def _run_one(args):
    spec, cap = args
    try:
        return run_theorem_suite(spec, cap), None
    except (CapExceeded, ValueError) as exc:
        return None, f"{type(exc).__name__}: {exc}"


def report_filename(i: int, spec: GroupSpec) -> str:
    slug = re.sub(r"[^a-z0-9]+", "_", str(spec).lower()).strip("_")
    return f"{i:03d}_{slug}.json"


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def run_corpus(config: CorpusConfig) -> CorpusResult:
    """Run the suite on every entry; errors are recorded, not raised.

    With ``output_dir`` set, writes one canonical JSON report per group,
    ``summary.json``, ``summary.txt`` and, separately, ``timings.json``.
    """
    jobs = [(spec, config.cap) for spec in config.entries]
    if config.parallel and len(jobs) > 1:
        with ProcessPoolExecutor() as pool:
            outcomes = list(pool.map(_run_one, jobs))
    else:
        outcomes = [_run_one(j) for j in jobs]
    result = CorpusResult()
    out = Path(config.output_dir) if config.output_dir else None
    if out:
        out.mkdir(parents=True, exist_ok=True)
    timings = {}
    for i, (spec, (report, error)) in enumerate(zip(config.entries, outcomes)):
        if error is not None:
            result.errors.append({"group": str(spec), "error": error})
            continue
        result.reports.append(report)
        result.rows.append({
            "group": report.group, "order": report.order, "subgroups": report.subgroup_count,
            "edges": report.edge_count, "girth": report.girth,
            "components": report.component_count, "all_pass": report.all_pass,
        })
        timings[report_filename(i, spec)] = {k: round(v, 6) for k, v in report.timings.items()}
        if out:
            (out / report_filename(i, spec)).write_text(dumps(report.canonical()))
    if out:
        (out / "timings.json").write_text(dumps(timings))
        (out / "summary.json").write_text(dumps(result.summary()))
        (out / "summary.txt").write_text(result.table() + "\n")
    return result


def probe_open_problem(config: CorpusConfig) -> list[dict]:
    """Search the corpus for a disconnected graph over connected ``N`` and ``G/N``.

    A candidate needs the graph of ``G`` itself to be disconnected, so only
    those groups are examined further.  Nothing is asserted about the output.
    """
    candidates = []
    for spec in config.entries:
        try:
            a = analyze(spec, config.cap)
        except CapExceeded:
            continue
        if a.report.connected:
            continue
        for N in a.proper_normals():
            sub, _ = subgroup_as_group(a.group, N)
            if not is_connected(build_prime_index_graph(enumerate_subgroups(sub))):
                continue
            Q = quotient(a.group, N).group
            if is_connected(build_prime_index_graph(enumerate_subgroups(Q))):
                candidates.append({"group": str(spec), "normal_subgroup": N.id,
                                   "normal_order": N.order})
    return candidates
