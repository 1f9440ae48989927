"""Pure-Python kernels over multiplication tables and element bitmasks.

Element sets are arbitrary-precision ints with bit ``i`` standing for
element ``i``.  Every function takes a prepared table handle as returned
by :func:`prepare_table`.  The compiled backend in ``_fast`` implements
the same signatures.
"""

from __future__ import annotations

NAME = "pure"


class Table:
    """Prepared multiplication table: rows, inverses, order."""

    __slots__ = ("n", "rows", "inv")

    def __init__(self, rows):
        self.n = len(rows)
        self.rows = [list(r) for r in rows]
        inv = [0] * self.n
        for a, row in enumerate(self.rows):
            inv[a] = row.index(0)
        self.inv = inv


def prepare_table(rows) -> Table:
    return Table(rows)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def closure_mask(tab: Table, mask: int) -> int:
    """Smallest subgroup containing the elements of ``mask``."""
    rows = tab.rows
    members = 1  # identity
    elems = [0]
    for g in _bits(mask & ~1):
        members |= 1 << g
        elems.append(g)
    i = 0
    while i < len(elems):
        x = elems[i]
        rx = rows[x]
        j = 0
        while j < len(elems):
            y = elems[j]
            z = rx[y]
            if not members >> z & 1:
                members |= 1 << z
                elems.append(z)
            z = rows[y][x]
            if not members >> z & 1:
                members |= 1 << z
                elems.append(z)
            j += 1
        i += 1
    return members


def product_mask(tab: Table, amask: int, bmask: int) -> int:
    rows = tab.rows
    out = 0
    bs = list(_bits(bmask))
    for a in _bits(amask):
        ra = rows[a]
        for b in bs:
            out |= 1 << ra[b]
    return out


def commutator_closure_mask(tab: Table, hmask: int, kmask: int) -> int:
    """Subgroup generated by all commutators h^-1 k^-1 h k."""
    rows = tab.rows
    inv = tab.inv
    gens = 1
    ks = list(_bits(kmask))
    for h in _bits(hmask):
        ih = inv[h]
        for k in ks:
            gens |= 1 << rows[rows[rows[ih][inv[k]]][h]][k]
    return closure_mask(tab, gens)


def centralizer_mask(tab: Table, kmask: int, hmask: int) -> int:
    """Elements of K commuting with every element of H."""
    rows = tab.rows
    hs = list(_bits(hmask))
    out = 0
    for k in _bits(kmask):
        rk = rows[k]
        if all(rk[h] == rows[h][k] for h in hs):
            out |= 1 << k
    return out


def conjugacy_class_ids(tab: Table) -> list:
    """Class label per element; labels increase in first-seen order."""
    rows = tab.rows
    inv = tab.inv
    n = tab.n
    ids = [-1] * n
    next_id = 0
    for g in range(n):
        if ids[g] >= 0:
            continue
        for a in range(n):
            ids[rows[rows[a][g]][inv[a]]] = next_id
        next_id += 1
    return ids


def count_commuting_pairs(tab: Table) -> int:
    rows = tab.rows
    n = tab.n
    total = 0
    for a in range(n):
        ra = rows[a]
        for b in range(n):
            if ra[b] == rows[b][a]:
                total += 1
    return total


def sum_centralizer_orders(tab: Table, hmask: int, kmask: int) -> int:
    """Sum over h in H of |C_K(h)|."""
    rows = tab.rows
    ks = list(_bits(kmask))
    total = 0
    for h in _bits(hmask):
        rh = rows[h]
        for k in ks:
            if rh[k] == rows[k][h]:
                total += 1
    return total


def count_trivial_iterated_commutators(tab: Table, brackets: int, mask: int) -> int:
    """Tuples (x_1..x_{brackets+1}) from ``mask`` whose left-normed
    iterated commutator is the identity."""
    rows = tab.rows
    inv = tab.inv
    n = tab.n
    elems = list(_bits(mask))
    ctab = []
    for a in range(n):
        ia = inv[a]
        ria = rows[ia]
        ctab.append([rows[rows[ria[inv[b]]][a]][b] for b in range(n)])
    last = brackets  # depth of the final element

    def rec(depth: int, acc: int) -> int:
        row = ctab[acc]
        if depth == last:
            return sum(1 for e in elems if row[e] == 0)
        return sum(rec(depth + 1, row[e]) for e in elems)

    if brackets == 0:
        return 1 if mask & 1 else 0
    return sum(rec(1, e) for e in elems)


def is_associative(tab: Table) -> bool:
    rows = tab.rows
    n = tab.n
    for a in range(n):
        ra = rows[a]
        for b in range(n):
            rab = rows[ra[b]]
            rb = rows[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    return False
    return True


def is_normal_mask(tab: Table, mask: int) -> bool:
    rows = tab.rows
    inv = tab.inv
    hs = list(_bits(mask))
    for a in range(tab.n):
        ra = rows[a]
        ia = inv[a]
        for h in hs:
            if not mask >> rows[ra[h]][ia] & 1:
                return False
    return True
