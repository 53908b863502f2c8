"""Concrete finite permutation groups with full multiplication tables.

Every group is enumerated completely.  Elements are addressed by their index
in ``Group.elements``; index 0 is the identity.  ``Group.table[a, b]`` is the
index of ``a * b`` where, as for :class:`Permutation`, ``a`` acts first.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .groupdef import GroupSpec
from .numbers import factorize, is_prime
from .perm import Permutation

DEFAULT_CAP = 1000


class CapExceeded(RuntimeError):
    """The group (or an intermediate closure) is larger than allowed."""


@dataclass(eq=False)
class Subgroup:
    """A subgroup of a :class:`Group`, as a membership bitset.

    Bit ``i`` of ``bits`` is set when element ``i`` of the parent belongs to
    the subgroup.  ``gens`` are element indices generating it; ``id`` is the
    position in the parent's lattice, or -1 when not yet located there.
    """

    bits: int
    members: np.ndarray
    gens: tuple[int, ...] = ()
    id: int = -1

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, i: int) -> bool:
        return (self.bits >> int(i)) & 1 == 1

    def issubset(self, other: Subgroup) -> bool:
        return self.bits & ~other.bits == 0

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.bits == other.bits

    def __hash__(self):
        return hash(self.bits)

    def __repr__(self):
        return f"Subgroup(order={self.order}, id={self.id})"


def _bits_from_mask(mask: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


def _key_weights(degree: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.integers(1, 2**63, size=degree, dtype=np.uint64, endpoint=False) | np.uint64(1)


class Group:
    """A permutation group given by generators, fully enumerated.

    Elements are listed breadth-first from the identity: level ``k`` holds
    the elements first reached as products of ``k`` generators, and each
    level is sorted by image array.
    """

    def __init__(self, degree: int, generators, cap: int = DEFAULT_CAP, spec: GroupSpec | None = None):
        self.degree = degree
        self.generators = tuple(generators)
        self.spec = spec
        self.cap = cap
        for g in self.generators:
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
        elements = self._closure([g.images for g in self.generators], degree, cap)
        self.elements = np.array(elements, dtype=np.int32).reshape(len(elements), degree)
        self.order = len(elements)
        self._build_table()
        self.gen_indices = tuple(self.index_of(g) for g in self.generators)
        self._max_proper = self.order // min(factorize(self.order)) if self.order > 1 else 0

    @staticmethod
    def _closure(gens, degree, cap):
        identity = tuple(range(degree))
        seen = {identity}
        elements = [identity]
        frontier = [identity]
        while frontier:
            level = set()
            for x in frontier:
                for g in gens:
                    y = tuple(g[i] for i in x)
                    if y not in seen:
                        seen.add(y)
                        level.add(y)
            if len(seen) > cap:
                raise CapExceeded(f"group order exceeds cap {cap}")
            frontier = sorted(level)
            elements.extend(frontier)
        return elements

    def _build_table(self):
        n, d = self.order, self.degree
        E = self.elements
        for seed in range(100):
            w = _key_weights(max(d, 1), seed)
            keys = (E.astype(np.uint64) * w[:d]).sum(axis=1) if d else np.zeros(n, np.uint64)
            order = np.argsort(keys, kind="stable")
            sk = keys[order]
            if n < 2 or np.all(sk[1:] != sk[:-1]):
                break
        else:  # pragma: no cover
            raise RuntimeError("could not find collision-free element keys")
        self._w, self._sorted_keys, self._key_order = w[:d], sk, order
        # products of group elements are group elements, so unique keys
        # among the elements make the lookup exact
        table = np.empty((n, n), dtype=np.int32)
        for a in range(n):
            prod = E[:, E[a]]  # row b: a then b
            table[a] = self._lookup(prod)
        self.table = table
        self.table_list = self.table.tolist()
        self.inverse = np.argmin(self.table, axis=1).astype(np.int32)

    def _lookup(self, rows: np.ndarray) -> np.ndarray:
        if self.degree == 0:
            return np.zeros(len(rows), dtype=np.int32)
        keys = (rows.astype(np.uint64) * self._w).sum(axis=-1)
        pos = np.searchsorted(self._sorted_keys, keys)
        pos = np.minimum(pos, len(self._sorted_keys) - 1)
        if not np.all(self._sorted_keys[pos] == keys):
            raise KeyError("permutation not in group")
        return self._key_order[pos].astype(np.int32)

    def index_of(self, perm: Permutation) -> int:
        idx = int(self._lookup(np.array([perm.images], dtype=np.int32))[0])
        if tuple(self.elements[idx]) != perm.images:
            raise KeyError(f"{perm} not in group")
        return idx

    def indices_of(self, rows: np.ndarray) -> np.ndarray:
        """Vectorized :meth:`index_of` for an array of image rows."""
        idx = self._lookup(rows)
        if not np.array_equal(self.elements[idx], rows):
            raise KeyError("permutation not in group")
        return idx

    def perm(self, i: int) -> Permutation:
        return Permutation(tuple(int(x) for x in self.elements[i]))

    def mul(self, a: int, b: int) -> int:
        return self.table_list[a][b]

    def is_abelian(self) -> bool:
        g = np.array(self.gen_indices, dtype=np.int64)
        return bool(np.array_equal(self.table[np.ix_(g, g)], self.table[np.ix_(g, g)].T))

    def is_cyclic(self) -> bool:
        return any(element_order(self, i) == self.order for i in range(self.order))

    @property
    def identity_subgroup(self) -> Subgroup:
        return Subgroup(1, np.array([0], dtype=np.int32), ())

    @property
    def whole(self) -> Subgroup:
        return Subgroup((1 << self.order) - 1, np.arange(self.order, dtype=np.int32), self.gen_indices)

    def __repr__(self):
        name = str(self.spec) if self.spec is not None else f"degree {self.degree}"
        return f"Group({name}, order={self.order})"


# -- construction ----------------------------------------------------------

def _cycle(points: list[int], degree: int) -> Permutation:
    return Permutation.from_cycles([points], degree)


def spec_generators(spec: GroupSpec) -> tuple[int, list[Permutation]]:
    """Degree and generating permutations for ``spec``."""
    k, p = spec.kind, spec.params
    if k == "cyclic":
        n = p[0]
        return n, [_cycle(list(range(n)), n)]
    if k == "sym":
        n = p[0]
        if n < 3:
            return n, [_cycle(list(range(n)), n)]
        return n, [_cycle([0, 1], n), _cycle(list(range(n)), n)]
    if k == "alt":
        n = p[0]
        if n < 3:
            return n, [Permutation.identity(n)]
        return n, [_cycle([0, 1, j], n) for j in range(2, n)]
    if k == "dihedral":
        n = p[0]
        if n == 1:
            return 2, [_cycle([0, 1], 2)]
        if n == 2:
            return 4, [Permutation.from_cycles([[0, 1], [2, 3]], 4), Permutation.from_cycles([[0, 2], [1, 3]], 4)]
        reflection = Permutation(tuple((-i) % n for i in range(n)))
        return n, [_cycle(list(range(n)), n), reflection]
    if k == "quaternion8":
        i = Permutation.from_cycles([[0, 1, 2, 3], [4, 5, 6, 7]], 8)
        j = Permutation.from_cycles([[0, 4, 2, 6], [1, 7, 3, 5]], 8)
        return 8, [i, j]
    if k == "abelian":
        degree = sum(p)
        gens, offset = [], 0
        for n in p:
            gens.append(_cycle(list(range(offset, offset + n)), degree))
            offset += n
        return degree, gens
    if k == "psl2":
        q = p[0]
        if not is_prime(q):
            raise ValueError(f"psl2 argument {q} is not prime")
        inf = q
        # projective line: 0..q-1 and infinity = q
        translate = [(x + 1) % q for x in range(q)] + [inf]
        invert = [inf] + [(-pow(x, -1, q)) % q for x in range(1, q)] + [0]
        return q + 1, [Permutation(tuple(translate)), Permutation(tuple(invert))]
    if k == "product":
        da, ga = spec_generators(spec.factors[0])
        db, gb = spec_generators(spec.factors[1])
        degree = da + db
        return degree, [g.extend(degree) for g in ga] + [g.extend(degree, da) for g in gb]
    if k == "perm":
        return p[0], list(spec.generators) or [Permutation.identity(p[0])]
    raise ValueError(f"unknown kind {k!r}")


def construct(spec: GroupSpec, cap: int = DEFAULT_CAP) -> Group:
    """Build the permutation group described by ``spec``.

    Raises :class:`CapExceeded` when the order would exceed ``cap``.
    """
    degree, gens = spec_generators(spec)
    return Group(degree, gens, cap=cap, spec=spec)


def element_order(G: Group, i: int) -> int:
    k, x, t = 1, i, G.table_list
    while x != 0:
        x = t[x][i]
        k += 1
    return k


# -- subgroup closure --------------------------------------------------------

def join(G: Group, H: Subgroup, g: int) -> Subgroup:
    """``<H, g>`` by coset enumeration (Dimino's step).

    Stops early once the closure is larger than any proper divisor of
    ``|G|``, since it must then be all of ``G``.
    """
    if g in H:
        return H
    t = G.table
    tl = G.table_list
    hm = H.members
    mark = np.zeros(G.order, dtype=bool)
    mark[hm] = True
    gens = H.gens + (g,)
    reps = [0]
    count = len(hm)
    limit = G._max_proper

    def add(y):
        nonlocal count
        mark[t[hm, y]] = True
        reps.append(y)
        count += len(hm)

    add(g)
    pos = 1
    while pos < len(reps):
        if count > limit:
            return Subgroup(G.whole.bits, G.whole.members, gens)
        row = tl[reps[pos]]
        for s in gens:
            y = row[s]
            if not mark[y]:
                add(y)
        pos += 1
    if count > limit:
        return Subgroup(G.whole.bits, G.whole.members, gens)
    return Subgroup(_bits_from_mask(mark), np.flatnonzero(mark).astype(np.int32), gens)


def generate(G: Group, elements, base: Subgroup | None = None) -> Subgroup:
    """Subgroup generated by ``base`` (default trivial) and ``elements``."""
    H = base if base is not None else G.identity_subgroup
    for x in elements:
        x = int(x)
        if x not in H:
            H = join(G, H, x)
    return H


def subgroup_from_bits(G: Group, bits: int) -> Subgroup:
    members = np.array([i for i in range(G.order) if (bits >> i) & 1], dtype=np.int32)
    return Subgroup(bits, members, ())


def greedy_generators(G: Group, H: Subgroup) -> tuple[int, ...]:
    """Generating set chosen greedily from ``H``'s members in index order."""
    cur = G.identity_subgroup
    gens = []
    for x in H.members:
        if cur.bits == H.bits:
            break
        x = int(x)
        if x not in cur:
            gens.append(x)
            cur = join(G, cur, x)
    return tuple(gens)


def conjugate_members(G: Group, H: Subgroup, g: int) -> np.ndarray:
    """Member indices of ``g H g^-1``."""
    return G.table[G.table[g, H.members], G.inverse[g]]


def conjugate_subgroup(G: Group, H: Subgroup, g: int) -> Subgroup:
    """``g H g^-1`` with generators carried along."""
    mask = np.zeros(G.order, dtype=bool)
    mask[conjugate_members(G, H, g)] = True
    gens = tuple(G.table_list[G.table_list[g][x]][G.inverse[g]] for x in H.gens)
    return Subgroup(_bits_from_mask(mask), np.flatnonzero(mask).astype(np.int32), gens)


def conjugacy_orbit(G: Group, H: Subgroup) -> list[Subgroup]:
    """Distinct conjugates of ``H``, found by conjugating with generators."""
    orbit = {H.bits: H}
    todo = [H]
    while todo:
        K = todo.pop()
        for g in G.gen_indices:
            C = conjugate_subgroup(G, K, g)
            if C.bits not in orbit:
                orbit[C.bits] = C
                todo.append(C)
    return list(orbit.values())


def is_normal(G: Group, H: Subgroup) -> bool:
    """True iff conjugation by every generator of ``G`` preserves ``H``."""
    mask = np.zeros(G.order, dtype=bool)
    mask[H.members] = True
    return all(mask[conjugate_members(G, H, g)].all() for g in G.gen_indices)


# -- quotients and series ----------------------------------------------------

@dataclass(eq=False)
class Quotient:
    """``G/N`` realised as a permutation group on the cosets of ``N``.

    ``coset_of[x]`` is the coset index of element ``x`` (cosets sorted by
    least member, which is also the coset label in ``coset_reps``);
    ``coset_map[x]`` is the element of ``group`` that ``x`` maps to.
    """

    parent: Group
    kernel: Subgroup
    group: Group
    coset_reps: np.ndarray
    coset_of: np.ndarray
    coset_map: np.ndarray = field(repr=False)


def quotient(G: Group, N: Subgroup, cap: int | None = None) -> Quotient:
    """Quotient by a normal subgroup, acting on cosets by right multiplication.

    ``xN -> xgN`` is well defined because ``N`` is normal, and with the
    left-to-right product it is a homomorphism rather than an
    anti-homomorphism.
    """
    if not is_normal(G, N):
        raise ValueError("subgroup is not normal")
    t = G.table
    labels = t[:, N.members].min(axis=1)
    reps = np.unique(labels).astype(np.int32)
    coset_of = np.searchsorted(reps, labels).astype(np.int32)
    k = len(reps)
    # actions[g] is the permutation of cosets induced by g
    actions = coset_of[t[reps][:, np.arange(G.order)]].T
    gens = [Permutation(tuple(int(c) for c in actions[g])) for g in G.gen_indices]
    Q = Group(k, gens, cap=cap or max(G.cap, G.order))
    coset_map = Q.indices_of(actions)
    return Quotient(G, N, Q, reps, coset_of, coset_map)


def derived_subgroup(G: Group, H: Subgroup | None = None) -> Subgroup:
    """Subgroup generated by all commutators ``x^-1 y^-1 x y`` of members of ``H``."""
    H = G.whole if H is None else H
    m = H.members
    inv = G.inverse
    t = G.table
    xy_inv = t[inv[m][:, None], inv[m][None, :]]
    comm = t[t[xy_inv, m[:, None]], m[None, :]]
    return generate(G, np.unique(comm))


def derived_series(G: Group) -> list[Subgroup]:
    series = [G.whole]
    while True:
        D = derived_subgroup(G, series[-1])
        if D.bits == series[-1].bits:
            return series
        series.append(D)


def is_solvable(G: Group) -> tuple[bool, list[Subgroup]]:
    """Solvability with the derived series as witness.

    The series runs until it stabilises; ``G`` is solvable iff it ends at
    the trivial subgroup.
    """
    series = derived_series(G)
    return series[-1].order == 1, series


def sylow_order(n: int, p: int) -> int:
    return p ** factorize(n).get(p, 0)


def is_nilpotent(G: Group, lattice=None) -> bool:
    """Nilpotency via the normal-Sylow criterion.

    A finite group is nilpotent exactly when each of its Sylow subgroups
    is normal; the Sylow subgroups are read off the subgroup lattice.
    """
    if lattice is None:
        from .lattice import enumerate_subgroups

        lattice = enumerate_subgroups(G)
    for p in factorize(G.order) if G.order > 1 else ():
        target = sylow_order(G.order, p)
        for H in lattice.subgroups:
            if H.order == target and not is_normal(G, H):
                return False
    return True


def subgroup_as_group(G: Group, H: Subgroup) -> tuple[Group, np.ndarray]:
    """Rebuild ``H`` as a standalone group.

    Returns the new group and ``embed`` with ``embed[i]`` the index in ``G``
    of the new group's element ``i``.
    """
    gens = H.gens or greedy_generators(G, H)
    sub = Group(G.degree, [G.perm(i) for i in gens], cap=max(G.cap, G.order))
    embed = G.indices_of(sub.elements)
    return sub, embed
