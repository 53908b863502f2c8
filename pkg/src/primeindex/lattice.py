"""Complete subgroup lattices.

Enumeration is a closure fixpoint: starting from the trivial subgroup,
known subgroups are extended by every cyclic subgroup not already inside
them, and new results are queued.  Adjoining a cyclic subgroup is the same
as adjoining any of its generators.  Whenever a new subgroup appears its
whole conjugacy class is added, and only that one representative is
extended further: ``<xHx^-1, g> = x<H, x^-1 g x>x^-1``, so the extensions of
the other conjugates are conjugates of extensions already found.  The
fixpoint therefore contains ``<H, g>`` for every member ``H`` and every
element ``g``.  Any subgroup can be reached from the trivial one by
adjoining its elements one at a time, which makes the result complete.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .group import (CapExceeded, Group, Subgroup, conjugacy_orbit, greedy_generators,
                    is_normal, join)

__all__ = [
    "Lattice", "enumerate_subgroups", "cyclic_subgroups", "index", "is_normal", "core",
    "conjugates", "closure_certificate", "lattice_to_json", "sublattice_bits",
]


@dataclass(eq=False)
class Lattice:
    """All subgroups of ``group`` in canonical order.

    Subgroups are sorted by order, then by their sorted member indices;
    ``subgroups[i].id == i``.  ``membership[i, x]`` tells whether element
    ``x`` lies in subgroup ``i``; ``contains[i, j]`` whether subgroup ``i``
    is contained in subgroup ``j`` (reflexive).
    """

    group: Group
    subgroups: list[Subgroup]
    membership: np.ndarray = field(repr=False)
    contains: np.ndarray = field(repr=False)
    _by_bits: dict = field(repr=False, default_factory=dict)
    _normal: np.ndarray | None = field(repr=False, default=None)

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def __getitem__(self, i: int) -> Subgroup:
        return self.subgroups[i]

    @property
    def orders(self) -> np.ndarray:
        return self.membership.sum(axis=1)

    @property
    def trivial(self) -> Subgroup:
        return self.subgroups[0]

    @property
    def top(self) -> Subgroup:
        return self.subgroups[-1]

    def locate(self, bits: int) -> Subgroup:
        """The lattice member with membership bitset ``bits``."""
        try:
            return self.subgroups[self._by_bits[bits]]
        except KeyError:
            raise KeyError("not a subgroup in this lattice") from None

    def locate_mask(self, mask: np.ndarray) -> Subgroup:
        return self.locate(int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little"))

    @property
    def normal(self) -> np.ndarray:
        """Boolean array: is subgroup ``i`` normal in the group."""
        if self._normal is None:
            self._normal = np.array([is_normal(self.group, H) for H in self.subgroups], dtype=bool)
        return self._normal

    def normal_subgroups(self) -> list[Subgroup]:
        return [H for H, n in zip(self.subgroups, self.normal) if n]

    def strict_pairs(self) -> tuple[np.ndarray, np.ndarray]:
        """Index arrays ``(h, k)`` of all pairs with ``H`` strictly inside ``K``."""
        c = self.contains.copy()
        np.fill_diagonal(c, False)
        return np.nonzero(c)

    def below(self, N: Subgroup) -> list[int]:
        """Ids of subgroups contained in ``N``."""
        return [int(i) for i in np.flatnonzero(self.contains[:, N.id])]

    def above(self, N: Subgroup) -> list[int]:
        """Ids of subgroups containing ``N``."""
        return [int(i) for i in np.flatnonzero(self.contains[N.id, :])]


def cyclic_subgroups(G: Group) -> list[tuple[int, int]]:
    """``(generator, bits)`` for every cyclic subgroup, least generator kept."""
    seen: dict[int, int] = {}
    t = G.table_list
    for x in range(G.order):
        bits, y = 1, x
        while y != 0:
            bits |= 1 << y
            y = t[y][x]
        seen.setdefault(bits, x)
    return [(g, b) for b, g in seen.items()]


MAX_SUBGROUPS = 5000


def enumerate_subgroups(G: Group, max_subgroups: int | None = MAX_SUBGROUPS) -> Lattice:
    """Every subgroup of ``G``, deduplicated by membership bitset.

    ``max_subgroups`` bounds the lattice size (the containment matrix is
    quadratic in it); :class:`CapExceeded` is raised as soon as it is passed.
    """
    if G.order > G.cap:
        raise CapExceeded(f"group order {G.order} exceeds cap {G.cap}")
    cyclic = sorted(cyclic_subgroups(G), key=lambda gb: gb[0])
    trivial = G.identity_subgroup
    found = {trivial.bits: trivial}
    queue = [trivial]
    while queue:
        H = queue.pop()
        for g, cbits in cyclic:
            if cbits & ~H.bits == 0:
                continue
            K = join(G, H, g)
            if K.bits in found:
                continue
            for C in conjugacy_orbit(G, K):
                found[C.bits] = C
            queue.append(K)
            if max_subgroups is not None and len(found) > max_subgroups:
                raise CapExceeded(f"more than {max_subgroups} subgroups")
    return _assemble(G, list(found.values()))


def _assemble(G: Group, subs: list[Subgroup]) -> Lattice:
    subs.sort(key=lambda H: (H.order, H.members.tolist()))
    membership = np.zeros((len(subs), G.order), dtype=bool)
    by_bits = {}
    for i, H in enumerate(subs):
        H.id = i
        membership[i, H.members] = True
        by_bits[H.bits] = i
    m = membership.astype(np.float32)
    inter = m @ m.T
    orders = membership.sum(axis=1)
    contains = inter == orders[:, None].astype(np.float32)
    return Lattice(G, subs, membership, contains, by_bits)


def closure_certificate(L: Lattice, elements=None):
    """Check ``<H, g>`` is in the lattice for every member ``H`` and element ``g``.

    Returns ``(True, None)`` or ``(False, (H.id, g))`` for the first failure.
    Also checks that the trivial and whole subgroups are present and that
    there are no duplicates.
    """
    G = L.group
    if len(L._by_bits) != len(L.subgroups):
        return False, "duplicate subgroup"
    if L.trivial.order != 1 or L.top.order != G.order:
        return False, "trivial or whole group missing"
    elements = range(G.order) if elements is None else elements
    for H in L.subgroups:
        for g in elements:
            if g in H:
                continue
            K = join(G, H, int(g))
            if K.bits not in L._by_bits:
                return False, (H.id, int(g))
    return True, None


def index(K: Subgroup, H: Subgroup) -> int:
    """``[K : H]`` for ``H`` contained in ``K``."""
    if not H.issubset(K):
        raise ValueError("H is not contained in K")
    return K.order // H.order


def core(G: Group, H: Subgroup) -> Subgroup:
    """Intersection of ``g H g^-1`` over all ``g`` in ``G``."""
    t, inv = G.table, G.inverse
    conj = t[t[:, H.members], inv[:, None]]
    mask = np.zeros((G.order, G.order), dtype=bool)
    mask[np.arange(G.order)[:, None], conj] = True
    inside = mask.all(axis=0)
    bits = int.from_bytes(np.packbits(inside, bitorder="little").tobytes(), "little")
    return Subgroup(bits, np.flatnonzero(inside).astype(np.int32), ())


def conjugates(G: Group, H: Subgroup, lattice: Lattice | None = None) -> list[Subgroup]:
    """Distinct conjugates of ``H``: its orbit under conjugation by generators.

    With ``lattice`` given, each conjugate is returned as the lattice member.
    """
    out = conjugacy_orbit(G, H)
    if lattice is not None:
        out = [lattice.locate(C.bits) for C in out]
        out.sort(key=lambda C: C.id)
    return out


def lattice_to_json(L: Lattice) -> list[dict]:
    """Export records: id, order, members (hex bitset), is_normal, generator_witness."""
    return [
        {
            "id": H.id,
            "order": H.order,
            "members": hex(H.bits),
            "is_normal": bool(n),
            "generator_witness": list(greedy_generators(L.group, H)),
        }
        for H, n in zip(L.subgroups, L.normal)
    ]


def sublattice_bits(L: Lattice, N: Subgroup) -> set[int]:
    """Bitsets of all lattice members inside ``N``."""
    return {L.subgroups[i].bits for i in L.below(N)}

