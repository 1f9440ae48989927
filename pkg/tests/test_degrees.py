from __future__ import annotations

from fractions import Fraction

import pytest

import oracles
from latdeg import (
    BudgetExceeded,
    bracket_table,
    d_group,
    d_multi,
    d_pair,
    enumerate_subgroups,
    make_cyclic,
    make_dihedral,
    make_modular,
    make_quaternion,
    make_symmetric,
    phi,
    sd_group,
    ssd_group,
    ssd_multi,
)


def test_d_group_values():
    assert d_group(make_cyclic(12)) == 1
    assert d_group(make_symmetric(3)) == Fraction(1, 2)
    assert d_group(make_dihedral(4)) == Fraction(5, 8)


def test_d_group_matches_oracle(builtin16):
    for g, _ in builtin16:
        assert d_group(g) == oracles.d(g.table)


def test_d_pair():
    s3 = make_symmetric(3)
    full = s3.full_subgroup()
    assert d_pair(s3, full, full) == d_group(s3)
    lat = enumerate_subgroups(s3)
    a3 = next(s for s in lat.subgroups if s.size == 3)
    t = next(s for s in lat.subgroups if s.size == 2)
    assert d_pair(s3, t, a3) == Fraction(2, 3)
    c2, c3 = [s for s in enumerate_subgroups(make_cyclic(6)).subgroups if s.size in (2, 3)]
    c6 = make_cyclic(6)
    assert d_pair(c6, c2, c3) == 1


def test_d_pair_matches_oracle():
    for g in (make_symmetric(3), make_quaternion(), make_dihedral(4)):
        lat = enumerate_subgroups(g)
        for h in lat.subgroups:
            for k in lat.subgroups:
                assert d_pair(g, h, k) == oracles.d_pair(
                    g.table, h.members(), k.members()
                )


def test_d_multi():
    s3 = make_symmetric(3)
    assert d_multi(s3, 1) == d_group(s3)
    assert d_multi(make_cyclic(9), 3) == 1
    # frozen from the exhaustive triple loop
    assert d_multi(s3, 2) == Fraction(3, 4)
    assert d_multi(s3, 2) == oracles.d_multi(s3.table, 2)


def test_d_multi_within_subgroup():
    s4 = make_symmetric(4)
    a4 = s4.derived_series()[1]
    assert d_multi(s4, 2, within=a4) == oracles.d_multi(
        s4.table, 2, elements=a4.members()
    )


def test_d_multi_budget():
    with pytest.raises(BudgetExceeded):
        d_multi(make_symmetric(4), 3, budget=1000)


def test_sd_values():
    assert sd_group(make_cyclic(8), enumerate_subgroups(make_cyclic(8))) == 1
    s3 = make_symmetric(3)
    assert sd_group(s3, enumerate_subgroups(s3)) == Fraction(5, 6)
    m27 = make_modular(3, 3)
    assert sd_group(m27, enumerate_subgroups(m27)) == 1
    q8 = make_quaternion()
    assert sd_group(q8, enumerate_subgroups(q8)) == 1


def test_ssd_values():
    assert ssd_group(make_cyclic(8), enumerate_subgroups(make_cyclic(8))) == 1
    s3 = make_symmetric(3)
    assert ssd_group(s3, enumerate_subgroups(s3)) == Fraction(5, 12)
    q8 = make_quaternion()
    assert ssd_group(q8, enumerate_subgroups(q8)) == Fraction(23, 36)
    m27 = make_modular(3, 3)
    assert ssd_group(m27, enumerate_subgroups(m27)) < 1


def test_sd_ssd_match_oracle():
    for g in (make_symmetric(3), make_quaternion(), make_dihedral(4), make_cyclic(12)):
        lat = enumerate_subgroups(g)
        assert sd_group(g, lat) == oracles.sd(g.table)
        assert ssd_group(g, lat) == oracles.ssd(g.table)


def test_ssd_at_most_sd(builtin24):
    for g, lat in builtin24:
        assert ssd_group(g, lat) <= sd_group(g, lat)


def test_phi():
    s3 = make_symmetric(3)
    lat = enumerate_subgroups(s3)
    t1, t2 = [s for s in lat.subgroups if s.size == 2][:2]
    assert phi(s3, s3.trivial_subgroup(), t1) == 1
    assert phi(s3, t1, t2) == 0
    d8 = make_dihedral(4)
    latd = enumerate_subgroups(d8)
    for x in latd.subgroups:
        for y in latd.subgroups:
            assert phi(d8, x, y) == phi(d8, y, x)


def test_bracket_table_properties(builtin16):
    for g, lat in builtin16:
        table = bracket_table(g, lat)
        assert table.size == len(lat)
        for j in range(len(lat)):
            assert table.entry(0, j) == 0
        for i in range(len(lat)):
            join_i = set(lat[i].members())
            for j in range(len(lat)):
                assert table.entry(i, j) == table.entry(j, i)
                # [L_i, L_j] lies inside the join of L_i and L_j
                join = g.closure(join_i | set(lat[j].members()))
                assert lat[table.entry(i, j)].is_subset_of(join)


def test_bracket_entries_match_commutator_subgroup(builtin16):
    from latdeg import commutator_subgroup

    for g, lat in builtin16:
        if g.order > 12:
            continue
        table = bracket_table(g, lat)
        for i, h in enumerate(lat.subgroups):
            for j, k in enumerate(lat.subgroups):
                assert lat[table.entry(i, j)] == commutator_subgroup(g, h, k)


def test_ssd_multi_base_cases():
    s3 = make_symmetric(3)
    lat = enumerate_subgroups(s3)
    assert ssd_multi(s3, lat, s3.full_subgroup(), 1) == ssd_group(s3, lat)
    c8 = make_cyclic(8)
    lat8 = enumerate_subgroups(c8)
    for sub in lat8.subgroups:
        for n in (1, 2, 3):
            assert ssd_multi(c8, lat8, sub, n) == 1


def test_ssd_multi_s3_depth_2():
    # frozen from the exhaustive enumeration over all lattice triples
    s3 = make_symmetric(3)
    lat = enumerate_subgroups(s3)
    value = ssd_multi(s3, lat, s3.full_subgroup(), 2)
    assert value == Fraction(11, 18)
    assert value == oracles.ssd_multi(s3.table, frozenset(range(6)), 2)


def test_ssd_multi_dp_matches_enumeration(builtin16):
    for g, lat in builtin16:
        if len(lat) > 10:
            continue
        for h in lat.subgroups:
            h_set = frozenset(h.members())
            for n in (1, 2, 3):
                assert ssd_multi(g, lat, h, n) == oracles.ssd_multi(
                    g.table, h_set, n
                ), (g.label, h.members(), n)


def test_ssd_multi_codomain():
    s3 = make_symmetric(3)
    lat = enumerate_subgroups(s3)
    a3 = s3.derived_series()[1]
    value = ssd_multi(s3, lat, a3, 2, codomain=a3)
    assert value == oracles.ssd_multi(
        s3.table, frozenset(a3.members()), 2, codomain=frozenset(a3.members())
    )


def test_ssd_multi_n_cap():
    s3 = make_symmetric(3)
    lat = enumerate_subgroups(s3)
    with pytest.raises(BudgetExceeded):
        ssd_multi(s3, lat, s3.full_subgroup(), 5)


def test_ssd_multi_rejects_non_member():
    from latdeg import Subgroup

    s3 = make_symmetric(3)
    lat = enumerate_subgroups(s3)
    rot = next(a for a in range(6) if s3.order_of(a) == 3)
    not_closed = Subgroup.from_mask(1 | 1 << rot, 6)
    with pytest.raises(ValueError):
        ssd_multi(s3, lat, not_closed, 1)


def test_degrees_are_reduced_probabilities(builtin24):
    from math import gcd

    for g, lat in builtin24:
        for value in (
            d_group(g),
            sd_group(g, lat),
            ssd_group(g, lat),
            ssd_multi(g, lat, g.full_subgroup(), 2),
        ):
            assert 0 < value <= 1
            assert gcd(value.numerator, value.denominator) == 1
