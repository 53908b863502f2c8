"""Prime index graphs of small groups and their invariants."""

from primeindex.graphs import (build_index_digraph, build_prime_index_graph, build_subgroup_graph,
                               check_cycle_weight_invariant, closed_walk_products,
                               compute_invariants, to_dot)
from primeindex.group import construct
from primeindex.groupdef import GroupSpec
from primeindex.lattice import enumerate_subgroups

# %% S3: both ends of the lattice on one side, everything else on the other
L = enumerate_subgroups(construct(GroupSpec("sym", (3,))))
pi = build_prime_index_graph(L)
r = compute_invariants(pi)
print("S3 edges with primes:", pi.labels)
print("colouring", r.coloring, " complete bipartite:", r.is_complete_bipartite, " girth", r.girth)

# %% A4: the order-3 subgroups are maximal but not of prime index
L = enumerate_subgroups(construct(GroupSpec("alt", (4,))))
pi, sg = build_prime_index_graph(L), build_subgroup_graph(L)
print("A4 degrees by subgroup order:", [(H.order, d) for H, d in zip(L, pi.degrees())])
print("maximal but not prime index:", sorted(sg.edge_set() - pi.edge_set()))

# %% index digraph and weights round a closed walk
L = enumerate_subgroups(construct(GroupSpec("sym", (3,))))
D = build_index_digraph(L)
print("walk e -> Z2 -> S3 <- Z3 <- e: forward, backward products", closed_walk_products(D, [0, 1, 5, 4]))
print(check_cycle_weight_invariant(D))

# %% DOT output, ready for graphviz
print(to_dot(pi, L))
