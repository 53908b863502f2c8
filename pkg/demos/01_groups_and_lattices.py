"""Building permutation groups and enumerating every subgroup."""

from primeindex.group import construct, derived_series, element_order
from primeindex.groupdef import parse_group_definition
from primeindex.lattice import closure_certificate, conjugates, core, enumerate_subgroups

# %% a group from the definition language
spec = parse_group_definition("perm 4 : (1 2 3 4), (1 3)")
G = construct(spec)
print(G, "elements:", [str(G.perm(i)) for i in range(G.order)])

# every element is an index into the multiplication table
a, b = G.gen_indices
print("a*b =", G.perm(G.mul(a, b)), " order of a:", element_order(G, a))

# %% the subgroup lattice, in canonical order
L = enumerate_subgroups(G)
for H in L:
    flag = "normal" if L.normal[H.id] else ""
    print(f"  id {H.id:2d}  order {H.order}  {[str(G.perm(int(x))) for x in H.members]} {flag}")

ok, _ = closure_certificate(L)
print("closed under adjoining any element:", ok)

# %% conjugacy and cores
H = next(H for H in L if H.order == 2 and not L.normal[H.id])
print("conjugates of", H.id, "->", [C.id for C in conjugates(G, H, L)], " core order", core(G, H).order)

# %% bigger groups
for text in ["sym 4", "alt 5", "psl2 7"]:
    G = construct(parse_group_definition(text))
    L = enumerate_subgroups(G)
    print(f"{text:8s} order {G.order:4d}  subgroups {len(L):4d}  "
          f"derived series {[D.order for D in derived_series(G)]}")
