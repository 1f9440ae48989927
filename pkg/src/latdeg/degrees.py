"""Every probabilistic degree, computed as an exact Fraction.

No floating point touches any value here: the degrees are ratios of
tuple counts and all comparisons downstream are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from latdeg import _kernels as kernels
from latdeg.groups import Group, Subgroup
from latdeg.lattice import Lattice, _check_parent

DEFAULT_TUPLE_BUDGET = 10_000_000
MULTI_N_CAP = 4


class BudgetExceeded(ValueError):
    """Raised when a tuple enumeration would exceed its element budget."""


def d_group(g: Group) -> Fraction:
    """Probability that an ordered pair of elements commutes."""
    n = g.order
    return Fraction(kernels.count_commuting_pairs(g.ktab), n * n)


def d_pair(g: Group, h: Subgroup, k: Subgroup) -> Fraction:
    """Probability that a pair from H x K commutes; d(G, G) = d(G)."""
    _check_parent(g, h, k)
    good = kernels.sum_centralizer_orders(g.ktab, h.mask, k.mask)
    return Fraction(good, h.size * k.size)


def d_multi(
    g: Group,
    n: int,
    *,
    within: Subgroup | None = None,
    budget: int = DEFAULT_TUPLE_BUDGET,
) -> Fraction:
    """Probability that the left-normed commutator of an (n+1)-tuple of
    elements is trivial, by direct tuple enumeration.

    ``within`` restricts the tuple entries to a subgroup (the commutator
    values then stay inside it).
    """
    if n < 1:
        raise ValueError(f"tuple degree needs n >= 1, got {n}")
    if within is not None:
        _check_parent(g, within)
    size = within.size if within is not None else g.order
    tuples = size ** (n + 1)
    if tuples > budget:
        raise BudgetExceeded(
            f"{tuples} tuple evaluations exceed the budget of {budget}"
        )
    mask = within.mask if within is not None else (1 << g.order) - 1
    good = kernels.count_trivial_iterated_commutators(g.ktab, n, mask)
    return Fraction(good, tuples)


def phi(g: Group, x: Subgroup, y: Subgroup) -> int:
    """1 if [X, Y] = 1 else 0; symmetric in its arguments."""
    _check_parent(g, x, y)
    good = kernels.sum_centralizer_orders(g.ktab, x.mask, y.mask)
    return 1 if good == x.size * y.size else 0


def phi_rows(g: Group, lat: Lattice) -> tuple[int, ...]:
    """Row i is a bitmask over lattice positions j with [L_i, L_j] = 1.

    Computed once per lattice and cached; every ssd-style count reads it.
    """
    if lat._phi_rows is None:
        size = len(lat)
        rows = [0] * size
        for i, h in enumerate(lat.subgroups):
            for j in range(i, size):
                k = lat.subgroups[j]
                if (
                    kernels.sum_centralizer_orders(g.ktab, h.mask, k.mask)
                    == h.size * k.size
                ):
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        lat._phi_rows = tuple(rows)
    return lat._phi_rows


def perm_rows(g: Group, lat: Lattice) -> tuple[int, ...]:
    """Row i is a bitmask over lattice positions j with L_i L_j = L_j L_i."""
    if lat._perm_rows is None:
        size = len(lat)
        rows = [0] * size
        for i, h in enumerate(lat.subgroups):
            for j in range(i, size):
                k = lat.subgroups[j]
                hk = kernels.product_mask(g.ktab, h.mask, k.mask)
                kh = kernels.product_mask(g.ktab, k.mask, h.mask)
                if hk == kh:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        lat._perm_rows = tuple(rows)
    return lat._perm_rows


def sd_group(g: Group, lat: Lattice) -> Fraction:
    """Probability that an ordered pair of subgroups permutes."""
    rows = perm_rows(g, lat)
    size = len(lat)
    return Fraction(sum(r.bit_count() for r in rows), size * size)


def ssd_group(g: Group, lat: Lattice) -> Fraction:
    """Probability that an ordered pair of subgroups has trivial
    commutator subgroup."""
    rows = phi_rows(g, lat)
    size = len(lat)
    return Fraction(sum(r.bit_count() for r in rows), size * size)


@dataclass(frozen=True)
class BracketTable:
    """entries[i][j] is the lattice position of [L_i, L_j]."""

    entries: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    @property
    def size(self) -> int:
        return len(self.entries)


def bracket_table(g: Group, lat: Lattice) -> BracketTable:
    """All pairwise commutator subgroups as lattice positions.

    Each entry is computed as written (generators [h, k] with h from the
    row subgroup), without assuming symmetry; [A,B] = [B,A] holds
    group-theoretically and is asserted by the test suite instead.
    """
    if lat._bracket is None:
        ktab = g.ktab
        masks = [s.mask for s in lat.subgroups]
        index_of = lat.index_of
        entries = tuple(
            tuple(
                index_of[kernels.commutator_closure_mask(ktab, hm, km)]
                for km in masks
            )
            for hm in masks
        )
        lat._bracket = BracketTable(entries)
    return lat._bracket


def ssd_multi(
    g: Group,
    lat: Lattice,
    h: Subgroup,
    n: int,
    *,
    codomain: Subgroup | None = None,
    n_cap: int = MULTI_N_CAP,
) -> Fraction:
    """Probability that [L_1, ..., L_n, K] = 1 for L_i drawn from the
    subgroups of H and K from the subgroups of ``codomain`` (the whole
    group by default).

    The left-normed bracket is folded through the lattice bracket table
    by dynamic programming over intermediate subgroup values, which
    matches direct tuple enumeration exactly.
    """
    if n < 1:
        raise ValueError(f"iterated degree needs n >= 1, got {n}")
    if n > n_cap:
        raise BudgetExceeded(f"n = {n} exceeds the configured cap {n_cap}")
    _check_parent(g, h)
    lat.index(h)
    dom = lat.sublattice_indices(h)
    if codomain is None:
        cod_mask = (1 << len(lat)) - 1
        cod_size = len(lat)
    else:
        _check_parent(g, codomain)
        lat.index(codomain)
        cod = lat.sublattice_indices(codomain)
        cod_mask = 0
        for i in cod:
            cod_mask |= 1 << i
        cod_size = len(cod)
    table = bracket_table(g, lat).entries
    rows = phi_rows(g, lat)
    counts = {i: 1 for i in dom}
    for _ in range(n - 1):
        folded: dict[int, int] = {}
        for state, c in counts.items():
            row = table[state]
            for j in dom:
                t = row[j]
                folded[t] = folded.get(t, 0) + c
        counts = folded
    numerator = sum(
        c * (rows[state] & cod_mask).bit_count() for state, c in counts.items()
    )
    return Fraction(numerator, len(dom) ** n * cod_size)
