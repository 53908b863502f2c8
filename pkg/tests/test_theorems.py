import dataclasses

import numpy as np
import pytest

from primeindex.graphs import Graph, compute_invariants
from primeindex.groupdef import parse_group_definition
from primeindex.theorems import (FAIL, NA, PASS, THEOREM_IDS, analyze, edge_projection_violations,
                                 run_theorem_suite)

from support import analysis, group, lattice


def suite(text):
    return run_theorem_suite(analysis(text))


def test_every_check_reported_once_in_order():
    report = suite("sym 3")
    assert [c["id"] for c in report.checks] == list(THEOREM_IDS)
    assert all(c["status"] in (PASS, FAIL, NA) for c in report.checks)


def test_sym3():
    r = suite("sym 3")
    assert r.all_pass
    assert r.status("complete_bipartite_iff_order_p_or_pq") == PASS
    assert r.check("bipartite")["witness"] == {"part_sizes": [2, 4]}
    assert r.status("nilpotent_graphs_coincide") == NA
    assert r.status("solvable_connected") == PASS


def test_alt5():
    r = suite("alt 5")
    assert r.all_pass and r.subgroup_count == 59 and r.component_count == 1
    assert r.status("lattice_closure_certificate") == PASS
    assert r.status("solvable_connected") == NA
    assert r.check("alternating_symmetric_connectivity")["witness"]["expected_connected"] is True


def test_alt6_is_disconnected_with_isolated_top():
    r = suite("alt 6")
    assert r.all_pass and r.subgroup_count == 501 and r.component_count == 2
    w = r.check("order_500_disconnected_only_a6")["witness"]
    assert w["simple"] and w["order"] == 360
    assert w["unreachable_from_trivial"] == 500 and w["degree"] == 0
    assert r.status("connectivity_inheritance") == NA


def test_psl27_connected_with_index_7_maximal():
    a = analysis("psl2 7")
    r = run_theorem_suite(a)
    assert r.all_pass and r.component_count == 1
    top = a.lattice.top.id
    maximal = {h for h, k in a.subgroup_graph.edges if k == top}
    assert any(a.lattice[h].order == 24 for h in maximal)


def test_cyclic_prime_power_is_forest():
    r = suite("cyclic 16")
    assert r.check("forest_iff_cyclic_prime_power")["witness"]["forest"] is True
    assert r.status("cyclic_product_of_paths") == PASS
    assert r.status("regular_abelian_hypercube") == NA


def test_order_p_squared_reports_both_readings():
    w = suite("cyclic 9").check("complete_bipartite_iff_order_p_or_pq")["witness"]
    assert w["complete_bipartite"] is True
    assert w["holds_with_p_equal_q_allowed"] is True
    assert w["holds_with_distinct_primes_only"] is False


def test_squarefree_cyclic_is_hypercube_and_c4():
    assert suite("cyclic 30").check("regular_abelian_hypercube")["witness"]["hypercube_dimension"] == 3
    assert suite("cyclic 6").status("two_regular_is_c4") == PASS


def test_nilpotent_coincidence_and_products():
    r = suite("product { quaternion8 ; cyclic 3 }")
    assert r.status("nilpotent_graphs_coincide") == PASS
    assert r.check("direct_product_factors")["witness"]["factors_connected"] == ["quaternion8", "cyclic 3"]
    assert suite("abelian 3 3").status("direct_product_factors") == PASS


def test_inheritance_runs_on_every_normal_subgroup():
    r = suite("sym 4")
    assert r.check("connectivity_inheritance")["witness"] == {"normal_subgroups_checked": 2}
    assert r.status("connectivity_lifting") == PASS


def test_failures_carry_witnesses():
    a = analysis("sym 3")
    # a triangle glued onto the graph must be reported with its odd cycle
    edges = a.pi.edges + [(1, 2), (2, 3), (1, 3)]
    bad_pi = Graph(a.pi.vertex_count, edges, dict(a.pi.labels))
    fake = dataclasses.replace(a, pi=bad_pi, report=compute_invariants(bad_pi), _cache={})
    r = run_theorem_suite(fake)
    assert not r.all_pass
    assert r.status("bipartite") == FAIL
    assert len(r.check("bipartite")["witness"]["odd_cycle"]) % 2 == 1
    assert r.status("girth_4_or_infinity") == FAIL
    assert r.check("prime_index_subgraph_of_subgroup_graph")["witness"]["edge_not_maximal"]


def test_disconnected_solvable_graph_is_a_failure():
    a = analysis("cyclic 6")
    cut = Graph(a.pi.vertex_count, [e for e in a.pi.edges if 0 not in e])
    fake = dataclasses.replace(a, pi=cut, report=compute_invariants(cut), _cache={})
    c = run_theorem_suite(fake).check("solvable_connected")
    assert c["status"] == FAIL
    assert c["witness"]["components"] == 2 and c["witness"]["degree"] > 0


@pytest.mark.parametrize("text", ["sym 4", "dihedral 6", "quaternion8", "alt 4", "abelian 2 6",
                                  "product { sym 3 ; cyclic 2 }"])
def test_edge_projection_against_set_arithmetic(text):
    G, L = group(text), lattice(text)
    a = analysis(text)
    assert next(edge_projection_violations(L, a.pi), None) is None
    t = G.table
    for N in L.normal_subgroups():
        nset = set(N.members.tolist())
        for (h, k), p in a.pi.labels.items():
            H, K = L[h], L[k]
            hn = {int(t[x, y]) for x in H.members for y in N.members}
            kn = {int(t[x, y]) for x in K.members for y in N.members}
            h_cap = set(H.members.tolist()) & nset
            k_cap = set(K.members.tolist()) & nset
            first = k_cap == h_cap and len(kn) == p * len(hn)
            second = len(k_cap) == p * len(h_cap) and kn == hn
            assert first != second


def test_report_serialisation():
    r = suite("alt 4")
    body = r.canonical()
    assert "timings" not in body and body["schema"] == 1
    assert set(r.to_dict()["timings"]) >= {"construct", "enumerate", "checks"}


def test_analyze_accepts_spec():
    a = analyze(parse_group_definition("dihedral 5"))
    assert a.group.order == 10 and len(a.lattice) == 8
