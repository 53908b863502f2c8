"""Normal subgroups, quotients, and connectivity passing down to both."""

from primeindex.graphs import build_prime_index_graph, is_connected
from primeindex.group import construct, quotient, subgroup_as_group
from primeindex.groupdef import GroupSpec
from primeindex.lattice import enumerate_subgroups
from primeindex.theorems import edge_projection_violations

G = construct(GroupSpec("sym", (4,)))
L = enumerate_subgroups(G)
pi = build_prime_index_graph(L)
print("S4 connected:", is_connected(pi))

for N in L.normal_subgroups():
    if N.order in (1, G.order):
        continue
    sub, _ = subgroup_as_group(G, N)
    Q = quotient(G, N)
    LN, LQ = enumerate_subgroups(sub), enumerate_subgroups(Q.group)
    print(f"N order {N.order:2d}: Pi(N) connected {is_connected(build_prime_index_graph(LN))}, "
          f"G/N order {Q.group.order}, Pi(G/N) connected {is_connected(build_prime_index_graph(LQ))}, "
          f"subgroups above N {len(L.above(N))} = subgroups of G/N {len(LQ)}")

# %% each prime edge either survives in the N-part or in the quotient part, never both
print("edge projection violations:", list(edge_projection_violations(L, pi)))
