"""Oriented unlabelled counts."""

import pytest

from kgonal.bseries import GonalParams, compute_b
from kgonal.oriented import euler_phi, oriented_series


def test_euler_phi():
    assert euler_phi(1) == 1
    assert euler_phi(6) == 2
    assert euler_phi(9) == 6
    assert [euler_phi(d) for d in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
    with pytest.raises(ValueError):
        euler_phi(0)


def test_k3_prefix():
    got = oriented_series(GonalParams(3), 8)
    assert [int(c) for c in got.coeffs] == [1, 1, 1, 2, 7, 18, 68, 251, 1020]


def test_k4_prefix():
    got = oriented_series(GonalParams(4), 4)
    assert [int(c) for c in got.coeffs] == [1, 1, 1, 3, 11]


def test_single_polygon():
    for k in (2, 3, 5, 8):
        assert oriented_series(GonalParams(k), 1)[1] == 1


def test_k2_matches_free_trees():
    # with two-sided polygons orientation is invisible, so the oriented
    # counts already equal the plain unlabelled ones
    got = oriented_series(GonalParams(2), 10)
    assert [int(c) for c in got.coeffs] == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235]


def test_shared_table_reuse():
    params = GonalParams(5)
    table = compute_b(params, 12)
    a = oriented_series(params, 12, table)
    b = oriented_series(params, 8, table)
    assert a.truncate(8) == b
    with pytest.raises(ValueError):
        oriented_series(GonalParams(4), 8, table)


def test_bounded_by_rooted():
    for k in (2, 3, 4, 5):
        params = GonalParams(k)
        table = compute_b(params, 12)
        a_o = oriented_series(params, 12, table)
        for n in range(1, 13):
            assert 1 <= a_o[n] <= table.b[n]
