"""Complete subgroup lattices and subgroup-level primitives.

Enumeration seeds with all cyclic subgroups and joins pairs to a
fixpoint.  The canonical order is ascending size with ties broken by
the lexicographic order of the membership bit sequence (element 0
first), so lattice positions and every derived report are stable.
"""

from __future__ import annotations

from latdeg import _kernels as kernels
from latdeg.groups import Group, OrderCapExceeded, Subgroup, order_cap


def _lex_key(mask: int, n: int) -> int:
    # integer whose magnitude orders masks like their bitstrings
    return int(format(mask, f"0{n}b")[::-1], 2)


class Lattice:
    """All subgroups of a group in canonical order, with index lookup."""

    def __init__(self, group: Group, subgroups: list[Subgroup]):
        n = group.order
        ordered = sorted(subgroups, key=lambda s: (s.size, _lex_key(s.mask, n)))
        self.group = group
        self.subgroups: tuple[Subgroup, ...] = tuple(ordered)
        self.index_of: dict[int, int] = {s.mask: i for i, s in enumerate(ordered)}
        if len(self.index_of) != len(ordered):
            raise ValueError("duplicate subgroups in lattice")
        if ordered[0].size != 1 or ordered[-1].size != n:
            raise ValueError("lattice must contain the trivial and full subgroups")
        # caches filled lazily by the degrees module
        self._phi_rows: tuple[int, ...] | None = None
        self._perm_rows: tuple[int, ...] | None = None
        self._bracket = None

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def __getitem__(self, i: int) -> Subgroup:
        return self.subgroups[i]

    def index(self, sub: Subgroup) -> int:
        try:
            return self.index_of[sub.mask]
        except KeyError:
            raise ValueError("subgroup is not a member of this lattice") from None

    def sublattice_indices(self, top: Subgroup) -> tuple[int, ...]:
        """Positions of all members contained in ``top``."""
        return tuple(
            i for i, s in enumerate(self.subgroups) if s.mask & ~top.mask == 0
        )


def enumerate_subgroups(g: Group, *, cap: int | None = None) -> Lattice:
    """Every subgroup of ``g``: cyclic seeds, then pairwise joins to a
    fixpoint."""
    if g.order > order_cap(cap):
        raise OrderCapExceeded(
            f"{g.label} has order {g.order}, above the cap {order_cap(cap)}"
        )
    ktab = g.ktab
    masks: list[int] = [1]
    seen = {1}
    for a in range(1, g.order):
        m = kernels.closure_mask(ktab, 1 << a)
        if m not in seen:
            seen.add(m)
            masks.append(m)
    # worklist of unordered index pairs not yet joined
    work = [(i, j) for i in range(len(masks)) for j in range(i)]
    while work:
        i, j = work.pop()
        a, b = masks[i], masks[j]
        if a | b in (a, b):
            continue
        joined = kernels.closure_mask(ktab, a | b)
        if joined not in seen:
            seen.add(joined)
            masks.append(joined)
            k = len(masks) - 1
            work.extend((k, t) for t in range(k))
    subs = [Subgroup.from_mask(m, g.order) for m in masks]
    return Lattice(g, subs)


def _check_parent(g: Group, *subs: Subgroup) -> None:
    for s in subs:
        if s.parent_order != g.order:
            raise ValueError("subgroup does not belong to this group")


def permutes(g: Group, h: Subgroup, k: Subgroup) -> bool:
    """True iff the element sets HK and KH coincide."""
    _check_parent(g, h, k)
    hk = kernels.product_mask(g.ktab, h.mask, k.mask)
    kh = kernels.product_mask(g.ktab, k.mask, h.mask)
    return hk == kh


def commutator_subgroup(g: Group, h: Subgroup, k: Subgroup) -> Subgroup:
    """[H, K]: subgroup generated by all commutators [h, k]."""
    _check_parent(g, h, k)
    return Subgroup.from_mask(
        kernels.commutator_closure_mask(g.ktab, h.mask, k.mask), g.order
    )


def centralizer_in(g: Group, k: Subgroup, h: Subgroup) -> Subgroup:
    """C_K(H): elements of K commuting with every element of H."""
    _check_parent(g, k, h)
    return Subgroup.from_mask(
        kernels.centralizer_mask(g.ktab, k.mask, h.mask), g.order
    )


def _commutes_elementwise(g: Group, h: Subgroup, k: Subgroup) -> bool:
    # [H,K] = 1 iff every pair commutes, no closure needed
    return (
        kernels.sum_centralizer_orders(g.ktab, h.mask, k.mask) == h.size * k.size
    )


def comm_set(g: Group, lat: Lattice, h: Subgroup) -> list[Subgroup]:
    """All K in the lattice with [H, K] = 1."""
    _check_parent(g, h)
    lat.index(h)
    return [k for k in lat.subgroups if _commutes_elementwise(g, h, k)]


def c_set(g: Group, lat: Lattice, h: Subgroup) -> list[Subgroup]:
    """All K in the lattice permuting with H."""
    _check_parent(g, h)
    lat.index(h)
    return [k for k in lat.subgroups if permutes(g, h, k)]


def normal_subgroups(g: Group, lat: Lattice) -> list[Subgroup]:
    """Lattice members invariant under conjugation by every element."""
    return [s for s in lat.subgroups if kernels.is_normal_mask(g.ktab, s.mask)]
