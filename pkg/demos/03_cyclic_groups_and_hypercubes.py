"""Cyclic groups give products of paths; squarefree orders give hypercubes."""

from primeindex.graphs import (build_prime_index_graph, compute_invariants,
                               count_order_p_subgroups, path_product_graph,
                               verify_cyclic_isomorphism)
from primeindex.group import construct
from primeindex.groupdef import GroupSpec
from primeindex.lattice import enumerate_subgroups
from primeindex.numbers import factorize

for n in [8, 12, 30, 36, 60]:
    G = construct(GroupSpec.cyclic(n))
    L = enumerate_subgroups(G)
    pi = build_prime_index_graph(L)
    dims = list(factorize(n).values())
    r = compute_invariants(pi)
    print(f"Z{n:<3d} paths {[d + 1 for d in dims]}  isomorphic: {verify_cyclic_isomorphism(G, L, pi)}"
          f"  regular: {r.regular_k}  forest: {r.is_forest}")

q3 = path_product_graph([1, 1, 1])
print("Q3 vertices", q3.keys)

# %% order-p subgroups of elementary abelian groups
for p in (2, 3, 5):
    counts = []
    for k in (1, 2, 3):
        L = enumerate_subgroups(construct(GroupSpec("abelian", (p,) * k)))
        counts.append(count_order_p_subgroups(L, p))
    print(f"p={p}: counts {counts}  (p^k-1)/(p-1) = {[(p**k - 1) // (p - 1) for k in (1, 2, 3)]}")
