"""The per-group theorem suite, and a run over the built-in corpus."""

from primeindex.corpus import CorpusConfig, default_corpus, probe_open_problem, run_corpus
from primeindex.groupdef import parse_group_definition
from primeindex.theorems import run_theorem_suite

report = run_theorem_suite(parse_group_definition("product { sym 3 ; cyclic 4 }"))
for c in report.checks:
    print(f"  {c['status']:15s} {c['id']}")

# %% the whole default corpus; a couple of seconds per hundred groups
result = run_corpus(CorpusConfig(default_corpus()))
print(f"{len(result.rows)} groups, failures: {len(result.failures)}, errors: {len(result.errors)}")
print("\n".join(line for line in result.table().splitlines() if "sym" in line or "alt" in line))

# %% disconnected graph over a connected normal subgroup and quotient?
print("candidates:", probe_open_problem(CorpusConfig(default_corpus())))
