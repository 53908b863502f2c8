"""Where connectivity breaks: A5 and PSL(2,7) stay connected, A6 does not."""

import time

from primeindex.graphs import build_prime_index_graph, build_subgroup_graph, compute_invariants
from primeindex.group import construct, is_solvable
from primeindex.groupdef import GroupSpec
from primeindex.lattice import enumerate_subgroups

for spec in [GroupSpec("sym", (4,)), GroupSpec("alt", (5,)), GroupSpec("psl2", (7,)),
             GroupSpec("alt", (6,)), GroupSpec("sym", (6,))]:
    t0 = time.perf_counter()
    G = construct(spec)
    L = enumerate_subgroups(G)
    pi = build_prime_index_graph(L)
    r = compute_invariants(pi)
    solvable, _ = is_solvable(G)
    print(f"{str(spec):8s} |G|={G.order:4d} subgroups={len(L):5d} edges={r.edge_count:5d} "
          f"components={r.component_count} solvable={solvable} isolated={r.isolated} "
          f"({time.perf_counter() - t0:.2f}s)")

# %% PSL(2,7) has maximal subgroups of index 7 (two classes of S4)
L = enumerate_subgroups(construct(GroupSpec("psl2", (7,))))
covers = build_subgroup_graph(L).edge_set()
print("index-7 maximal subgroups:", [H.id for H in L if (H.id, L.top.id) in covers and H.order == 24])
