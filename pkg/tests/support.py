import functools
import itertools

import numpy as np
from primeindex.group import construct
from primeindex.groupdef import parse_group_definition
from primeindex.lattice import enumerate_subgroups
from primeindex.theorems import analyze


@functools.lru_cache(maxsize=None)
def group(text):
    return construct(parse_group_definition(text))


@functools.lru_cache(maxsize=None)
def lattice(text):
    return enumerate_subgroups(group(text))


@functools.lru_cache(maxsize=None)
def analysis(text):
    return analyze(group(text))


def brute_force_subgroups(G):
    """Every subset containing the identity and closed under products.

    Only usable up to order 12 or so; for finite sets closure under products
    is enough to be a subgroup.
    """
    n = G.order
    t = G.table
    found = set()
    for r in range(0, n):
        for rest in itertools.combinations(range(1, n), r):
            s = np.array((0,) + rest)
            mask = np.zeros(n, dtype=bool)
            mask[s] = True
            if mask[t[np.ix_(s, s)]].all():
                found.add(sum(1 << int(x) for x in s))
    return found


def by_order(L, order):
    return [H for H in L if H.order == order]
