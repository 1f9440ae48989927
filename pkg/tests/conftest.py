from __future__ import annotations

import pytest

from latdeg import claims, enumerate_subgroups


@pytest.fixture(scope="session")
def builtin24():
    """(group, lattice) pairs for every built-in instance of order <= 24."""
    groups = claims.builtin_groups_up_to(24)
    return [(g, enumerate_subgroups(g)) for g in groups]


@pytest.fixture(scope="session")
def builtin16(builtin24):
    return [(g, lat) for g, lat in builtin24 if g.order <= 16]
