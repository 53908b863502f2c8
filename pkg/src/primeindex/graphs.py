"""Graphs on subgroup lattices and their invariants.

Vertices are lattice ids.  Three graphs are built from a :class:`Lattice`:

* the prime index graph: ``H -- K`` when one contains the other with prime
  index, edges labelled by that prime;
* the subgroup graph: ``H -- K`` when one is maximal in the other;
* the index digraph: an arc ``H -> K`` of weight ``[K : H]`` for every
  strict containment.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .group import Group, element_order
from .lattice import Lattice
from .numbers import factorize, is_prime


@dataclass
class Graph:
    """Simple undirected graph on ``range(vertex_count)``.

    ``edges`` holds pairs ``(i, j)`` with ``i < j``, sorted.  ``labels`` maps
    an edge to its prime index for prime index graphs.
    """

    vertex_count: int
    edges: list[tuple[int, int]]
    labels: dict[tuple[int, int], int] = field(default_factory=dict)
    keys: list | None = None

    def __post_init__(self):
        self.edges = sorted({(min(a, b), max(a, b)) for a, b in self.edges})
        if any(a == b for a, b in self.edges):
            raise ValueError("loops are not allowed")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self.edges)

    def induced(self, vertices) -> Graph:
        """Subgraph induced on ``vertices``, relabelled ``0..len-1`` in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        edges = [(pos[a], pos[b]) for a, b in self.edges if a in pos and b in pos]
        labels = {(min(pos[a], pos[b]), max(pos[a], pos[b])): p
                  for (a, b), p in self.labels.items() if a in pos and b in pos}
        return Graph(len(pos), edges, labels)


@dataclass
class WeightedDigraph:
    vertex_count: int
    arcs: list[tuple[int, int, int]]


# -- builders ------------------------------------------------------------------

def build_prime_index_graph(L: Lattice) -> Graph:
    h, k = L.strict_pairs()
    orders = L.orders
    ratio = orders[k] // orders[h]
    primes = np.array([is_prime(int(r)) for r in range(L.group.order + 1)], dtype=bool)
    keep = primes[ratio]
    edges = list(zip(h[keep].tolist(), k[keep].tolist()))
    labels = dict(zip(edges, ratio[keep].tolist()))
    return Graph(len(L), edges, labels)


def build_index_digraph(L: Lattice) -> WeightedDigraph:
    """Arc ``H -> K`` weighted by ``[K : H]`` for every strict containment."""
    h, k = L.strict_pairs()
    orders = L.orders
    arcs = sorted(zip(h.tolist(), k.tolist(), (orders[k] // orders[h]).tolist()))
    return WeightedDigraph(len(L), arcs)


def build_subgroup_graph(L: Lattice) -> Graph:
    """Covering relation of the lattice: no subgroup strictly between."""
    strict = L.contains.copy()
    np.fill_diagonal(strict, False)
    s = strict.astype(np.float32)
    between = (s @ s) > 0
    h, k = np.nonzero(strict & ~between)
    return Graph(len(L), list(zip(h.tolist(), k.tolist())))


def path_product_graph(dims) -> Graph:
    """Cartesian product of paths with ``n_i + 1`` vertices each.

    Vertices are the vectors ``0 <= a_i <= n_i`` in lexicographic order
    (kept in ``keys``); edges join vectors differing by one in one place.
    """
    dims = list(dims)
    if any(n < 1 for n in dims):
        raise ValueError("path lengths must be >= 1")
    keys = list(itertools.product(*(range(n + 1) for n in dims)))
    pos = {v: i for i, v in enumerate(keys)}
    edges = []
    for v, i in pos.items():
        for c in range(len(dims)):
            if v[c] < dims[c]:
                w = v[:c] + (v[c] + 1,) + v[c + 1:]
                edges.append((i, pos[w]))
    return Graph(len(keys), edges, keys=keys)


# -- invariants ----------------------------------------------------------------

@dataclass
class InvariantReport:
    vertex_count: int
    edge_count: int
    bipartite: bool
    coloring: list[int] | None
    odd_cycle: list[int] | None
    girth: int | None  # None means infinite
    component_count: int
    component_of: list[int]
    degree_sequence: list[int]
    regular_k: int | None
    is_forest: bool
    is_complete_bipartite: bool
    isolated: list[int]

    @property
    def connected(self) -> bool:
        return self.component_count <= 1

    def to_dict(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "bipartite": self.bipartite,
            "coloring": self.coloring,
            "odd_cycle": self.odd_cycle,
            "girth": self.girth,
            "component_count": self.component_count,
            "component_of": self.component_of,
            "degree_sequence": self.degree_sequence,
            "regular_k": self.regular_k,
            "is_forest": self.is_forest,
            "is_complete_bipartite": self.is_complete_bipartite,
            "isolated": self.isolated,
        }


def _two_coloring(n: int, adj):
    color = [-1] * n
    parent = [-1] * n
    for root in range(n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    return None, _odd_cycle(u, w, parent)
    return color, None


def _odd_cycle(u: int, w: int, parent: list[int]) -> list[int]:
    def up(x):
        path = [x]
        while parent[x] >= 0:
            x = parent[x]
            path.append(x)
        return path

    pu, pw = up(u), up(w)
    common = set(pu) & set(pw)
    cu = [x for x in pu if x not in common]
    cw = [x for x in pw if x not in common]
    lca = next(x for x in pu if x in common)
    return cu + [lca] + cw[::-1]


def girth(n: int, adj) -> int | None:
    """Shortest cycle length, ``None`` when acyclic.

    BFS from every vertex.  A non-tree edge met while scanning a vertex at
    depth ``d`` closes a cycle of length at least ``2d``, so each search
    stops once ``2d`` reaches the best length found so far.
    """
    best = math.inf
    for s in range(n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if 2 * du >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, du + dist[w] + 1)
        if best == 3:
            break
    return None if best == math.inf else int(best)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def components(graph: Graph) -> list[int]:
    """Component label per vertex; labels are 0, 1, ... by least member."""
    uf = _UnionFind(graph.vertex_count)
    for a, b in graph.edges:
        uf.union(a, b)
    roots: dict[int, int] = {}
    return [roots.setdefault(uf.find(v), len(roots)) for v in range(graph.vertex_count)]


def compute_invariants(graph: Graph) -> InvariantReport:
    n = graph.vertex_count
    adj = graph.adjacency()
    coloring, odd = _two_coloring(n, adj)
    comp = components(graph)
    ncomp = len(set(comp))
    deg = graph.degrees()
    regular = deg[0] if deg and all(d == deg[0] for d in deg) else None
    forest = graph.edge_count == n - ncomp
    g = girth(n, adj)
    complete_bip = False
    if coloring is not None and ncomp == 1 and n >= 2:
        a = coloring.count(0)
        b = n - a
        complete_bip = a > 0 and b > 0 and graph.edge_count == a * b
    return InvariantReport(
        vertex_count=n,
        edge_count=graph.edge_count,
        bipartite=coloring is not None,
        coloring=coloring,
        odd_cycle=odd,
        girth=g,
        component_count=ncomp,
        component_of=comp,
        degree_sequence=sorted(deg, reverse=True),
        regular_k=regular,
        is_forest=forest,
        is_complete_bipartite=complete_bip,
        isolated=[v for v in range(n) if deg[v] == 0],
    )


def is_connected(graph: Graph) -> bool:
    return graph.vertex_count <= 1 or len(set(components(graph))) == 1


# -- the cycle weight invariant ------------------------------------------------

@dataclass
class CycleCheck:
    ok: bool
    cycles_checked: int
    violation: list[tuple[int, int, int]] | None = None  # arcs of a bad cycle, as traversed


def fundamental_cycles(D: WeightedDigraph):
    """Fundamental cycles of the underlying graph w.r.t. a BFS spanning forest.

    Each cycle is a list of ``(u, v, w, forward)`` steps going round once:
    step ``u -> v`` uses the arc ``u -> v`` when ``forward`` and ``v -> u``
    otherwise, ``w`` being the arc weight.
    """
    n = D.vertex_count
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for idx, (a, b, _) in enumerate(D.arcs):
        adj[a].append((b, idx))
        adj[b].append((a, idx))
    parent = [-1] * n
    parent_arc = [-1] * n
    depth = [-1] * n
    tree = set()
    for root in range(n):
        if depth[root] >= 0:
            continue
        depth[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w, idx in adj[u]:
                if depth[w] < 0:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    parent_arc[w] = idx
                    tree.add(idx)
                    queue.append(w)

    def step(u, v, idx):
        a, b, w = D.arcs[idx]
        return (u, v, w, (a, b) == (u, v))

    for idx, (a, b, w) in enumerate(D.arcs):
        if idx in tree:
            continue
        # a -> b, then back from b to a through the tree
        up_b, up_a = [], []
        x, y = b, a
        while depth[x] > depth[y]:
            up_b.append(step(x, parent[x], parent_arc[x]))
            x = parent[x]
        while depth[y] > depth[x]:
            up_a.append(step(parent[y], y, parent_arc[y]))
            y = parent[y]
        while x != y:
            up_b.append(step(x, parent[x], parent_arc[x]))
            x = parent[x]
            up_a.append(step(parent[y], y, parent_arc[y]))
            y = parent[y]
        yield [(a, b, w, True)] + up_b + up_a[::-1]


def cycle_products(cycle) -> tuple[int, int]:
    """Products of weights of arcs traversed forwards and backwards."""
    fwd = math.prod(w for _, _, w, f in cycle if f)
    bwd = math.prod(w for _, _, w, f in cycle if not f)
    return fwd, bwd


def check_cycle_weight_invariant(D: WeightedDigraph) -> CycleCheck:
    """Forward and backward weight products agree on every fundamental cycle.

    Taking logarithms, the signed weight sum is linear on the cycle space,
    so agreement on a cycle basis gives agreement on every cycle.
    """
    count = 0
    for cyc in fundamental_cycles(D):
        count += 1
        fwd, bwd = cycle_products(cyc)
        if fwd != bwd:
            return CycleCheck(False, count, [(u, v, w) for u, v, w, _ in cyc])
    return CycleCheck(True, count)


def closed_walk_products(D: WeightedDigraph, vertices) -> tuple[int, int]:
    """Weight products along the closed walk through ``vertices`` (in order)."""
    weight = {(a, b): w for a, b, w in D.arcs}
    cyc = []
    for u, v in zip(vertices, list(vertices[1:]) + list(vertices[:1])):
        if (u, v) in weight:
            cyc.append((u, v, weight[(u, v)], True))
        elif (v, u) in weight:
            cyc.append((u, v, weight[(v, u)], False))
        else:
            raise ValueError(f"no arc between {u} and {v}")
    return cycle_products(cyc)


# -- cyclic groups and elementary abelian counts -------------------------------

def exponent_vector(n: int, primes: list[int]) -> tuple[int, ...]:
    f = factorize(n)
    return tuple(f.get(p, 0) for p in primes)


def verify_cyclic_isomorphism(G: Group, L: Lattice, graph: Graph) -> bool:
    """Check the prime index graph of a cyclic group against a product of paths.

    Each subgroup goes to the exponent vector of its order.  The map must be
    a bijection onto the vertices of :func:`path_product_graph` and carry
    edges exactly onto edges.
    """
    if not any(element_order(G, i) == G.order for i in range(G.order)):
        raise ValueError("group is not cyclic")
    f = factorize(G.order)
    primes = sorted(f)
    target = path_product_graph([f[p] for p in primes])
    pos = {v: i for i, v in enumerate(target.keys)}
    image = [pos.get(exponent_vector(H.order, primes)) for H in L.subgroups]
    if None in image or len(set(image)) != len(image) or len(image) != target.vertex_count:
        return False
    mapped = {(min(image[a], image[b]), max(image[a], image[b])) for a, b in graph.edges}
    return mapped == target.edge_set()


def count_order_p_subgroups(L: Lattice, p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return sum(1 for H in L.subgroups if H.order == p)


# -- exports -------------------------------------------------------------------

def to_dot(graph: Graph, L: Lattice, name: str = "Pi") -> str:
    """DOT text: vertices ``order=k,id=i``, normal subgroups double-circled."""
    lines = [f"graph {name} {{"]
    for H, normal in zip(L.subgroups, L.normal):
        shape = "doublecircle" if normal else "circle"
        lines.append(f'  {H.id} [label="order={H.order},id={H.id}", shape={shape}];')
    for a, b in graph.edges:
        label = graph.labels.get((a, b))
        attr = f' [label="{label}"]' if label is not None else ""
        lines.append(f"  {a} -- {b}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(spec, L: Lattice, graph: Graph, report: InvariantReport) -> dict:
    return {
        "schema": 1,
        "group": str(spec) if spec is not None else None,
        "vertices": [
            {"id": H.id, "order": H.order, "members": hex(H.bits), "is_normal": bool(n)}
            for H, n in zip(L.subgroups, L.normal)
        ],
        "edges": [[a, b, graph.labels.get((a, b))] for a, b in graph.edges],
        "invariants": report.to_dict(),
    }
