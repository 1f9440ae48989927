"""Registry of verifiable claims about the degrees, and a runner that
checks each claim on concrete groups with exact arithmetic.

Claims C1..C20 are mathematical statements over a group, its subgroup
lattice, and the degree functions.  Free variables (a normal subgroup, a
fixed subgroup K or M, the depth n) are universally quantified over all
admissible values, one result per instantiation.  A failing instance is
reported with exact both sides and witnesses, never silently corrected:
several registered statements are genuinely false on small groups and
the runner's job is to document exactly where.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from latdeg import characters, degrees
from latdeg.arith import is_prime, sigma, tau
from latdeg.degrees import BudgetExceeded, DEFAULT_TUPLE_BUDGET
from latdeg.groups import (
    Group,
    OrderCapExceeded,
    Subgroup,
    make_cyclic,
    make_dihedral,
    make_modular,
    make_quaternion,
    make_symmetric,
    quotient,
)
from latdeg.lattice import enumerate_subgroups, normal_subgroups

DEFAULT_N_MAX = 3


@dataclass(frozen=True)
class Claim:
    id: str
    kind: str  # equality | non-strict-inequality | strict-inequality | iff
    description: str
    applicability: str


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    group_label: str
    instance: str
    applicable: bool
    holds: bool | None
    lhs: Fraction | int | None
    rhs: Fraction | int | None
    strict_observed: bool | None = None
    witnesses: tuple[str, ...] = ()
    note: str | None = None


@dataclass(frozen=True)
class SuiteReport:
    results: tuple[ClaimResult, ...]
    group_labels: tuple[str, ...]
    claim_ids: tuple[str, ...]

    @property
    def all_hold(self) -> bool:
        return all(r.holds for r in self.results if r.applicable)

    def violations(self) -> list[ClaimResult]:
        return [r for r in self.results if r.applicable and not r.holds]


class _Context:
    """Per-group caches shared by all claim runners."""

    def __init__(self, group: Group, n_max: int, tuple_budget: int, cap: int | None):
        self.group = group
        self.n_max = n_max
        self.tuple_budget = tuple_budget
        self.cap = cap
        self.lattice = enumerate_subgroups(group, cap=cap)
        self._cent: dict[tuple[int, int], int] = {}
        self._quotients: dict[int, tuple[int, Fraction]] = {}
        self._ssd_multi: dict[tuple[int, int, int | None], Fraction] = {}
        self._d_multi: dict[tuple[int, int], Fraction] = {}
        self._normal: list[int] | None = None

    # -- lattice-level basics -------------------------------------------

    @property
    def size(self) -> int:
        return len(self.lattice)

    def phi_rows(self) -> tuple[int, ...]:
        return degrees.phi_rows(self.group, self.lattice)

    def perm_rows(self) -> tuple[int, ...]:
        return degrees.perm_rows(self.group, self.lattice)

    def dom_mask(self, indices) -> int:
        m = 0
        for i in indices:
            m |= 1 << i
        return m

    def ssd_of(self, indices) -> Fraction:
        """ssd of a subgroup, computed on its sublattice inside the parent."""
        rows = self.phi_rows()
        dmask = self.dom_mask(indices)
        count = sum((rows[i] & dmask).bit_count() for i in indices)
        return Fraction(count, len(indices) ** 2)

    def sd_of(self, indices) -> Fraction:
        rows = self.perm_rows()
        dmask = self.dom_mask(indices)
        count = sum((rows[i] & dmask).bit_count() for i in indices)
        return Fraction(count, len(indices) ** 2)

    def ssd(self) -> Fraction:
        return degrees.ssd_group(self.group, self.lattice)

    def sd(self) -> Fraction:
        return degrees.sd_group(self.group, self.lattice)

    def phi_count(self) -> int:
        return sum(r.bit_count() for r in self.phi_rows())

    def cent_size(self, k_idx: int, h_idx: int) -> int:
        """|C_K(H)| for lattice members by position."""
        key = (k_idx, h_idx)
        if key not in self._cent:
            from latdeg import _kernels as kernels

            self._cent[key] = kernels.centralizer_mask(
                self.group.ktab,
                self.lattice[k_idx].mask,
                self.lattice[h_idx].mask,
            ).bit_count()
        return self._cent[key]

    def d_pair_sum(self) -> Fraction:
        """Sum of d(H, K) over all ordered lattice pairs."""
        total = Fraction(0)
        subs = self.lattice.subgroups
        for i, h in enumerate(subs):
            for j in range(i, len(subs)):
                k = subs[j]
                value = degrees.d_pair(self.group, h, k)
                total += value if i == j else 2 * value
        return total

    def weighted_cent_sum(self) -> int:
        """Sum over ordered pairs of d(H, K) |H| |K|, an integer."""
        from latdeg import _kernels as kernels

        subs = self.lattice.subgroups
        total = 0
        for i, h in enumerate(subs):
            for j in range(i, len(subs)):
                c = kernels.sum_centralizer_orders(
                    self.group.ktab, h.mask, subs[j].mask
                )
                total += c if i == j else 2 * c
        return total

    # -- derived data ----------------------------------------------------

    def normal_indices(self) -> list[int]:
        if self._normal is None:
            normals = normal_subgroups(self.group, self.lattice)
            self._normal = [self.lattice.index(s) for s in normals]
        return self._normal

    def quotient_stats(self, n_idx: int) -> tuple[int, Fraction]:
        """(lattice size, ssd) of the quotient by a normal member."""
        if n_idx not in self._quotients:
            q = quotient(self.group, self.lattice[n_idx])
            qlat = enumerate_subgroups(q, cap=self.cap)
            self._quotients[n_idx] = (len(qlat), degrees.ssd_group(q, qlat))
        return self._quotients[n_idx]

    def ssd_multi(self, h: Subgroup, n: int, codomain: Subgroup | None = None) -> Fraction:
        key = (h.mask, n, codomain.mask if codomain is not None else None)
        if key not in self._ssd_multi:
            self._ssd_multi[key] = degrees.ssd_multi(
                self.group, self.lattice, h, n, codomain=codomain, n_cap=max(4, n)
            )
        return self._ssd_multi[key]

    def d_multi_diag(self, k_idx: int, n: int) -> Fraction:
        key = (k_idx, n)
        if key not in self._d_multi:
            self._d_multi[key] = degrees.d_multi(
                self.group, n, within=self.lattice[k_idx], budget=self.tuple_budget
            )
        return self._d_multi[key]

    def is_cyclic_subgroup(self, s: Subgroup) -> bool:
        return any(self.group.order_of(a) == s.size for a in s.members())


CLAIMS: dict[str, Claim] = {}
_RUNNERS: dict[str, object] = {}


def _claim(id: str, kind: str, description: str, applicability: str):
    def wrap(fn):
        CLAIMS[id] = Claim(id, kind, description, applicability)
        _RUNNERS[id] = fn
        return fn

    return wrap


def _res(
    ctx: _Context,
    claim_id: str,
    instance: str,
    holds: bool,
    lhs,
    rhs,
    *,
    strict: bool | None = None,
    witnesses: tuple[str, ...] = (),
    note: str | None = None,
) -> ClaimResult:
    return ClaimResult(
        claim_id=claim_id,
        group_label=ctx.group.label,
        instance=instance,
        applicable=True,
        holds=holds,
        lhs=lhs,
        rhs=rhs,
        strict_observed=strict,
        witnesses=witnesses,
        note=note,
    )


def _not_applicable(ctx: _Context, claim_id: str, note: str) -> ClaimResult:
    return ClaimResult(
        claim_id=claim_id,
        group_label=ctx.group.label,
        instance="",
        applicable=False,
        holds=None,
        lhs=None,
        rhs=None,
        note=note,
    )


@_claim("C1", "iff", "ssd(G) = 1 exactly when G is abelian", "every group")
def _c1(ctx: _Context):
    value = ctx.ssd()
    abelian = ctx.group.is_abelian
    holds = (value == 1) == abelian
    yield _res(ctx, "C1", "", holds, value, Fraction(1),
               note=f"abelian={abelian}")


@_claim(
    "C2",
    "strict-inequality",
    "ssd(G) < (|G|^2/|L|^2) * sum over pairs of d(H,K)",
    "nontrivial groups (a one-element lattice forces equality)",
)
def _c2(ctx: _Context):
    if ctx.group.order == 1:
        yield _not_applicable(ctx, "C2", "trivial group: both sides equal 1")
        return
    n = ctx.group.order
    rhs = Fraction(n * n, ctx.size**2) * ctx.d_pair_sum()
    lhs = ctx.ssd()
    yield _res(ctx, "C2", "", lhs < rhs, lhs, rhs, strict=lhs < rhs)


@_claim(
    "C3",
    "non-strict-inequality",
    "sd(G) >= sum over H of |C_K(H)| / |L|^2 for every subgroup K; "
    "and sum of d(H,K)|H||K| >= sum of |C_K(H)| over all pairs",
    "every group, K universally quantified",
)
def _c3(ctx: _Context):
    sd_value = ctx.sd()
    size = ctx.size
    for k_idx in range(size):
        bound = Fraction(
            sum(ctx.cent_size(k_idx, h_idx) for h_idx in range(size)), size * size
        )
        yield _res(
            ctx, "C3", f"K=#{k_idx}", sd_value >= bound, sd_value, bound,
            witnesses=()
            if sd_value >= bound
            else (f"K={ctx.lattice[k_idx].bitstring()}",),
        )
    lhs = ctx.weighted_cent_sum()
    rhs = sum(
        ctx.cent_size(k_idx, h_idx)
        for k_idx in range(size)
        for h_idx in range(size)
    )
    yield _res(ctx, "C3", "sum", lhs >= rhs, lhs, rhs)


def _c4_bound(ctx: _Context, n_idx: int, middle_from_quotient: bool) -> Fraction:
    lat = ctx.lattice
    dom = lat.sublattice_indices(lat[n_idx])
    l_n = len(dom)
    ssd_n = ctx.ssd_of(dom)
    l_q, ssd_q = ctx.quotient_stats(n_idx)
    middle = ssd_q if middle_from_quotient else ssd_n
    return (
        Fraction(1, ctx.size**2)
        * (
            Fraction((l_n + l_q - 1) ** 2)
            + (middle - 1) * l_n**2
            + (ssd_q - 1) * l_q**2
        )
    )


@_claim(
    "C4",
    "non-strict-inequality",
    "for normal N: ssd(G) >= ((|L(N)|+|L(G/N)|-1)^2 + (ssd(N)-1)|L(N)|^2 "
    "+ (ssd(G/N)-1)|L(G/N)|^2) / |L(G)|^2",
    "every normal subgroup",
)
def _c4(ctx: _Context):
    value = ctx.ssd()
    for n_idx in ctx.normal_indices():
        rhs = _c4_bound(ctx, n_idx, middle_from_quotient=False)
        variant = _c4_bound(ctx, n_idx, middle_from_quotient=True)
        yield _res(
            ctx, "C4", f"N=#{n_idx}", value >= rhs, value, rhs,
            witnesses=()
            if value >= rhs
            else (f"N={ctx.lattice[n_idx].bitstring()}",),
            note=f"variant with quotient ssd in the middle term "
            f"{'holds' if value >= variant else 'fails'}",
        )


@_claim(
    "C5",
    "non-strict-inequality",
    "for normal N with N and G/N abelian: "
    "ssd(G) >= (|L(N)|+|L(G/N)|-1)^2 / |L(G)|^2",
    "normal subgroups with abelian N and abelian quotient",
)
def _c5(ctx: _Context):
    value = ctx.ssd()
    produced = False
    for n_idx in ctx.normal_indices():
        sub = ctx.lattice[n_idx]
        dom = ctx.lattice.sublattice_indices(sub)
        if ctx.ssd_of(dom) != 1:
            continue
        l_q, ssd_q = ctx.quotient_stats(n_idx)
        if ssd_q != 1:
            continue
        produced = True
        l_n = len(dom)
        rhs = Fraction((l_n + l_q - 1) ** 2, ctx.size**2)
        unsquared = Fraction((l_n + l_q - 1) ** 2, ctx.size)
        yield _res(
            ctx, "C5", f"N=#{n_idx}", value >= rhs, value, rhs,
            witnesses=() if value >= rhs else (f"N={sub.bitstring()}",),
            note=f"single-power denominator variant "
            f"{'holds' if value >= unsquared else 'fails'}",
        )
    if not produced:
        yield _not_applicable(
            ctx, "C5", "no normal subgroup with abelian N and abelian quotient"
        )


@_claim(
    "C6",
    "non-strict-inequality",
    "for normal N of prime index: "
    "ssd(G) >= (ssd(N)|L(N)|^2 + 2|L(N)| + 1) / |L(G)|^2",
    "normal subgroups of prime index",
)
def _c6(ctx: _Context):
    value = ctx.ssd()
    produced = False
    for n_idx in ctx.normal_indices():
        sub = ctx.lattice[n_idx]
        index = ctx.group.order // sub.size
        if not is_prime(index):
            continue
        produced = True
        dom = ctx.lattice.sublattice_indices(sub)
        l_n = len(dom)
        rhs = (ctx.ssd_of(dom) * l_n**2 + 2 * l_n + 1) / ctx.size**2
        yield _res(
            ctx, "C6", f"N=#{n_idx}", value >= rhs, value, rhs,
            witnesses=() if value >= rhs else (f"N={sub.bitstring()}",),
        )
    if not produced:
        yield _not_applicable(ctx, "C6", "no normal subgroup of prime index")


@_claim(
    "C7",
    "non-strict-inequality",
    "nonabelian solvable: ssd(G) >= (ssd(G')|L(G')|^2 + 2|L(G')| + 1) / |L(G)|^2; "
    "for metabelian G the ssd(G') factor is 1",
    "nonabelian solvable groups",
)
def _c7(ctx: _Context):
    g = ctx.group
    if g.is_abelian or not g.is_solvable:
        yield _not_applicable(ctx, "C7", "applies to nonabelian solvable groups")
        return
    value = ctx.ssd()
    derived = g.derived_series()[1]
    d_idx = ctx.lattice.index(derived)
    dom = ctx.lattice.sublattice_indices(derived)
    l_d = len(dom)
    rhs = (ctx.ssd_of(dom) * l_d**2 + 2 * l_d + 1) / ctx.size**2
    yield _res(ctx, "C7", f"G'=#{d_idx}", value >= rhs, value, rhs)
    if g.is_metabelian:
        rhs2 = Fraction(l_d**2 + 2 * l_d + 1, ctx.size**2)
        yield _res(ctx, "C7", "metabelian", value >= rhs2, value, rhs2)


@_claim(
    "C8",
    "non-strict-inequality",
    "(|L(H)|^2/|L(G)|^2) ssd(H) <= ssd(G); and for every M <= H: "
    "sum over L <= H of |C_M(L)| / |L(G)|^2 <= sd(H) <= sd(G)",
    "every subgroup H, M universally quantified over subgroups of H",
)
def _c8(ctx: _Context):
    ssd_g = ctx.ssd()
    sd_g = ctx.sd()
    size = ctx.size
    for h_idx, h in enumerate(ctx.lattice.subgroups):
        dom = ctx.lattice.sublattice_indices(h)
        l_h = len(dom)
        lhs = Fraction(l_h**2, size**2) * ctx.ssd_of(dom)
        yield _res(ctx, "C8", f"H=#{h_idx}", lhs <= ssd_g, lhs, ssd_g)
        sd_h = ctx.sd_of(dom)
        yield _res(
            ctx, "C8", f"H=#{h_idx}|sd-chain", sd_h <= sd_g, sd_h, sd_g,
            witnesses=() if sd_h <= sd_g else (f"H={h.bitstring()}",),
        )
        for m_idx in dom:
            bound = Fraction(
                sum(ctx.cent_size(m_idx, l_idx) for l_idx in dom), size**2
            )
            yield _res(
                ctx, "C8", f"H=#{h_idx},M=#{m_idx}", bound <= sd_h, bound, sd_h
            )


def _coprime_factors(g: Group) -> tuple[list[Group] | None, str | None]:
    if not g.factors or len(g.factors) < 2:
        return None, "group was not built as a direct product"
    factors = list(g.factors)
    for i, a in enumerate(factors):
        for b in factors[i + 1 :]:
            if gcd(a.order, b.order) != 1:
                return None, f"factor orders |{a.label}|, |{b.label}| share a divisor"
    return factors, None


@_claim(
    "C9",
    "equality",
    "for pairwise coprime factors: ssd of the product equals the product "
    "of the factor ssd values",
    "direct products with pairwise coprime factor orders",
)
def _c9(ctx: _Context):
    factors, reason = _coprime_factors(ctx.group)
    if factors is None:
        yield _not_applicable(ctx, "C9", reason)
        return
    lhs = ctx.ssd()
    rhs = Fraction(1)
    for f in factors:
        rhs *= degrees.ssd_group(f, enumerate_subgroups(f, cap=ctx.cap))
    yield _res(ctx, "C9", f"factors={len(factors)}", lhs == rhs, lhs, rhs)


@_claim(
    "C10",
    "non-strict-inequality",
    "the iterated degree is non-increasing in the depth n "
    "(strictness recorded per step)",
    "every subgroup H, consecutive depths up to n_max",
)
def _c10(ctx: _Context):
    for h_idx, h in enumerate(ctx.lattice.subgroups):
        values = [ctx.ssd_multi(h, n) for n in range(1, ctx.n_max + 1)]
        for n in range(1, ctx.n_max):
            lhs, rhs = values[n - 1], values[n]
            yield _res(
                ctx, "C10", f"H=#{h_idx},n={n}->{n + 1}",
                lhs >= rhs, lhs, rhs, strict=lhs > rhs,
                witnesses=() if lhs >= rhs else (f"H={h.bitstring()}",),
            )


@_claim(
    "C11",
    "non-strict-inequality",
    "ssd_n(H,G) <= ssd_n(G,G) <= ssd(G) <= sd(G)",
    "every subgroup H, depths up to n_max",
)
def _c11(ctx: _Context):
    full = ctx.group.full_subgroup()
    ssd_g = ctx.ssd()
    sd_g = ctx.sd()
    diag = {n: ctx.ssd_multi(full, n) for n in range(1, ctx.n_max + 1)}
    for h_idx, h in enumerate(ctx.lattice.subgroups):
        for n in range(1, ctx.n_max + 1):
            lhs = ctx.ssd_multi(h, n)
            rhs = diag[n]
            yield _res(
                ctx, "C11", f"H=#{h_idx},n={n}", lhs <= rhs, lhs, rhs,
                witnesses=() if lhs <= rhs else (f"H={h.bitstring()}",),
            )
    for n in range(1, ctx.n_max + 1):
        yield _res(ctx, "C11", f"diag,n={n}", diag[n] <= ssd_g, diag[n], ssd_g)
    yield _res(ctx, "C11", "ssd<=sd", ssd_g <= sd_g, ssd_g, sd_g)


@_claim(
    "C12",
    "equality",
    "for coprime C, D and subgroups A <= C, B <= D: "
    "ssd_n(AxB, CxD) = ssd_n(A,C) * ssd_n(B,D)",
    "direct products with pairwise coprime factor orders",
)
def _c12(ctx: _Context):
    factors, reason = _coprime_factors(ctx.group)
    if factors is None:
        yield _not_applicable(ctx, "C12", reason)
        return
    full = ctx.group.full_subgroup()
    if len(factors) == 2:
        g1, g2 = factors
        lat1 = enumerate_subgroups(g1, cap=ctx.cap)
        lat2 = enumerate_subgroups(g2, cap=ctx.cap)
        for i1, a in enumerate(lat1.subgroups):
            for i2, b in enumerate(lat2.subgroups):
                mask = 0
                for x in a.members():
                    for y in b.members():
                        mask |= 1 << (x * g2.order + y)
                ab = Subgroup.from_mask(mask, ctx.group.order)
                for n in range(1, ctx.n_max + 1):
                    lhs = ctx.ssd_multi(ab, n)
                    rhs = degrees.ssd_multi(
                        g1, lat1, a, n, n_cap=max(4, n)
                    ) * degrees.ssd_multi(g2, lat2, b, n, n_cap=max(4, n))
                    yield _res(
                        ctx, "C12", f"A=#{i1},B=#{i2},n={n}", lhs == rhs, lhs, rhs
                    )
    else:
        # with more than two factors, check the full product per depth
        for n in range(1, ctx.n_max + 1):
            lhs = ctx.ssd_multi(full, n)
            rhs = Fraction(1)
            for f in factors:
                flat = enumerate_subgroups(f, cap=ctx.cap)
                rhs *= degrees.ssd_multi(
                    f, flat, f.full_subgroup(), n, n_cap=max(4, n)
                )
            yield _res(ctx, "C12", f"full,n={n}", lhs == rhs, lhs, rhs)


@_claim(
    "C13",
    "strict-inequality",
    "ssd_n(H,H) < (|H|^(n+1)/|L(H)|^(n+1)) * sum over K <= H of d_n(K,K)",
    "nontrivial subgroups H (a one-member lattice forces equality)",
)
def _c13(ctx: _Context):
    for h_idx, h in enumerate(ctx.lattice.subgroups):
        if h.size == 1:
            continue
        dom = ctx.lattice.sublattice_indices(h)
        l_h = len(dom)
        for n in range(1, ctx.n_max + 1):
            cost = sum(ctx.lattice[k].size ** (n + 1) for k in dom)
            if cost > ctx.tuple_budget:
                yield ClaimResult(
                    claim_id="C13",
                    group_label=ctx.group.label,
                    instance=f"H=#{h_idx},n={n}",
                    applicable=False,
                    holds=None,
                    lhs=None,
                    rhs=None,
                    note=f"skipped: {cost} tuple evaluations exceed the budget",
                )
                continue
            lhs = ctx.ssd_multi(h, n, codomain=h)
            total = sum(
                (ctx.d_multi_diag(k, n) for k in dom), start=Fraction(0)
            )
            rhs = Fraction(h.size ** (n + 1), l_h ** (n + 1)) * total
            yield _res(
                ctx, "C13", f"H=#{h_idx},n={n}", lhs < rhs, lhs, rhs,
                strict=lhs < rhs,
                witnesses=() if lhs < rhs else (f"H={h.bitstring()}",),
            )


@_claim(
    "C14",
    "non-strict-inequality",
    "(|L(H)|^(n+1)/|L(G)|^(n+1)) * ssd_n(H,H) <= ssd_n(G,G)",
    "every subgroup H, depths up to n_max",
)
def _c14(ctx: _Context):
    full = ctx.group.full_subgroup()
    size = ctx.size
    diag = {n: ctx.ssd_multi(full, n) for n in range(1, ctx.n_max + 1)}
    for h_idx, h in enumerate(ctx.lattice.subgroups):
        dom = ctx.lattice.sublattice_indices(h)
        l_h = len(dom)
        for n in range(1, ctx.n_max + 1):
            lhs = Fraction(l_h ** (n + 1), size ** (n + 1)) * ctx.ssd_multi(
                h, n, codomain=h
            )
            yield _res(
                ctx, "C14", f"H=#{h_idx},n={n}", lhs <= diag[n], lhs, diag[n]
            )


@_claim(
    "C15",
    "equality",
    "the dihedral group of order 2n has sigma(n) + tau(n) subgroups",
    "dihedral family instances",
)
def _c15(ctx: _Context):
    family = ctx.group.family
    if not family or family[0] != "D":
        yield _not_applicable(ctx, "C15", "not a dihedral family instance")
        return
    n = family[1]
    rhs = sigma(n) + tau(n)
    yield _res(ctx, "C15", f"n={n}", ctx.size == rhs, ctx.size, rhs)


@_claim(
    "C16",
    "non-strict-inequality",
    "metabelian, even order, cyclic G', |L| = sigma(|G|/2) + tau(|G|/2): "
    "(tau(|G'|)+1)^2/|L|^2 <= sum of phi(H,K) <= (|G|^2/|L|^2) * sum of d(H,K)",
    "metabelian even-order groups with cyclic G' and dihedral-sized lattice",
)
def _c16(ctx: _Context):
    g = ctx.group
    if g.order % 2 or not g.is_metabelian:
        yield _not_applicable(ctx, "C16", "needs even order and a metabelian group")
        return
    if ctx.size != sigma(g.order // 2) + tau(g.order // 2):
        yield _not_applicable(ctx, "C16", "lattice size is not sigma+tau of |G|/2")
        return
    derived = g.derived_series()[1]
    if not ctx.is_cyclic_subgroup(derived):
        yield _not_applicable(ctx, "C16", "derived subgroup is not cyclic")
        return
    mid = ctx.phi_count()
    lower = Fraction((tau(derived.size) + 1) ** 2, ctx.size**2)
    upper = Fraction(g.order**2, ctx.size**2) * ctx.d_pair_sum()
    yield _res(ctx, "C16", "lower", lower <= mid, lower, mid)
    yield _res(ctx, "C16", "upper", mid <= upper, mid, upper)


@_claim("C17", "equality", "xi is constant on conjugacy classes", "every group")
def _c17(ctx: _Context):
    values = [characters.xi(ctx.group, ctx.lattice, a) for a in range(ctx.group.order)]
    witnesses = []
    for cls in ctx.group.conjugacy_classes():
        first = values[cls[0]]
        witnesses.extend(
            f"x={cls[0]},y={other}" for other in cls[1:] if values[other] != first
        )
    yield _res(
        ctx, "C17", "", not witnesses, len(witnesses), 0,
        witnesses=tuple(witnesses),
    )


@_claim(
    "C18",
    "equality",
    "elements generating the same cyclic subgroup share their xi value",
    "every group",
)
def _c18(ctx: _Context):
    violations = characters.equal_generator_invariance(ctx.group, ctx.lattice)
    yield _res(
        ctx, "C18", "", not violations, len(violations), 0,
        witnesses=tuple(f"x={x},y={y}" for x, y in violations),
    )


@_claim(
    "C19",
    "equality",
    "the conjugacy class count equals |G| * d(G)",
    "every group",
)
def _c19(ctx: _Context):
    lhs = characters.class_count(ctx.group)
    rhs = ctx.group.order * degrees.d_group(ctx.group)
    yield _res(ctx, "C19", "", lhs == rhs, lhs, rhs)


@_claim(
    "C20",
    "equality",
    "modular p-group presentations have sd = 1 and ssd < 1",
    "modular family instances",
)
def _c20(ctx: _Context):
    family = ctx.group.family
    if not family or family[0] != "M":
        yield _not_applicable(ctx, "C20", "not a modular family instance")
        return
    note = None
    if family[1] == 2 and family[2] == 3:
        note = (
            "at (p,m)=(2,3) the presentation is the order-8 dihedral group, "
            "whose subgroup lattice is not modular"
        )
    sd_value = ctx.sd()
    ssd_value = ctx.ssd()
    yield _res(ctx, "C20", "sd", sd_value == 1, sd_value, Fraction(1), note=note)
    yield _res(
        ctx, "C20", "ssd", ssd_value < 1, ssd_value, Fraction(1),
        strict=ssd_value < 1,
    )


def _params(params: dict | None) -> tuple[int, int, int | None]:
    params = params or {}
    return (
        int(params.get("n_max", DEFAULT_N_MAX)),
        int(params.get("tuple_budget", DEFAULT_TUPLE_BUDGET)),
        params.get("order_cap"),
    )


def _run_one(claim_id: str, ctx: _Context) -> list[ClaimResult]:
    try:
        return list(_RUNNERS[claim_id](ctx))
    except (BudgetExceeded, OrderCapExceeded) as exc:
        return [_not_applicable(ctx, claim_id, f"skipped: {exc}")]


def run_claim(claim_id: str, group: Group, params: dict | None = None) -> list[ClaimResult]:
    """Check one claim on one group, one result per instantiation."""
    if claim_id not in CLAIMS:
        raise ValueError(f"unknown claim id {claim_id!r}")
    n_max, budget, cap = _params(params)
    ctx = _Context(group, n_max, budget, cap)
    return _run_one(claim_id, ctx)


def run_suite(
    groups: list[Group],
    claim_filter: list[str] | None = None,
    params: dict | None = None,
) -> SuiteReport:
    """Run every (selected) claim on every group, in registry-then-group
    order."""
    ids = list(CLAIMS) if claim_filter is None else list(claim_filter)
    for cid in ids:
        if cid not in CLAIMS:
            raise ValueError(f"unknown claim id {cid!r}")
    n_max, budget, cap = _params(params)
    contexts = [_Context(g, n_max, budget, cap) for g in groups]
    results: list[ClaimResult] = []
    for cid in ids:
        for ctx in contexts:
            results.extend(_run_one(cid, ctx))
    return SuiteReport(
        results=tuple(results),
        group_labels=tuple(g.label for g in groups),
        claim_ids=tuple(ids),
    )


def builtin_groups_up_to(max_order: int, *, cap: int | None = None) -> list[Group]:
    """All built-in family instances of order <= max_order, sorted by
    (order, label)."""
    groups: list[Group] = []
    for n in range(1, max_order + 1):
        groups.append(make_cyclic(n, cap=cap))
    for n in range(1, max_order // 2 + 1):
        groups.append(make_dihedral(n, cap=cap))
    fact = 1
    for n in range(1, 6):
        fact *= n
        if fact > max_order:
            break
        groups.append(make_symmetric(n, cap=cap))
    if max_order >= 8:
        groups.append(make_quaternion(cap=cap))
    p = 2
    while p**3 <= max_order:
        if is_prime(p):
            m = 3
            while p**m <= max_order:
                groups.append(make_modular(p, m, cap=cap))
                m += 1
        p += 1
    groups.sort(key=lambda g: (g.order, g.label))
    return groups
