"""Unlabelled counts for odd k: pinned rows and route agreement."""

import pytest

from kgonal.bseries import GonalParams, compute_b
from kgonal.odd import (
    odd_edge_rooted_counts,
    odd_omega,
    odd_recurrence,
    odd_series,
    odd_symmetric_series,
)
from kgonal.oriented import oriented_series


def test_rejects_even_k():
    with pytest.raises(ValueError):
        odd_series(GonalParams(4), 5)
    with pytest.raises(ValueError):
        odd_recurrence(GonalParams(2), 5)


def test_k3_row():
    got = odd_series(GonalParams(3), 6)
    assert [int(c) for c in got.coeffs] == [1, 1, 1, 2, 5, 12, 39]


def test_row_spot_values():
    assert odd_series(GonalParams(5), 5).coeffs[:6] == tuple(
        odd_recurrence(GonalParams(5), 5).coeffs[:6]
    )
    assert int(odd_series(GonalParams(5), 4)[4]) == 11
    assert int(odd_series(GonalParams(7), 5)[5]) == 158
    assert int(odd_recurrence(GonalParams(9), 4)[4]) == 32
    assert int(odd_recurrence(GonalParams(3), 0)[0]) == 1


def test_omega_values():
    table3 = compute_b(GonalParams(3), 6)
    assert odd_omega(GonalParams(3), 1, table3) == 2
    assert odd_omega(GonalParams(3), 2, table3) == 0
    table5 = compute_b(GonalParams(5), 6)
    assert odd_omega(GonalParams(5), 3, table5) == 4


def test_routes_agree():
    # acceptance widens this to all odd k <= 11 at order 20
    for k in (3, 5, 7):
        params = GonalParams(k)
        table = compute_b(params, 14)
        assert odd_series(params, 14, table) == odd_recurrence(params, 14, table)


def test_symmetric_series_consistency():
    for k in (3, 5):
        params = GonalParams(k)
        table = compute_b(params, 12)
        sym = odd_symmetric_series(params, 12, table)
        a = odd_series(params, 12, table)
        a_o = oriented_series(params, 12, table)
        for n in range(13):
            # the symmetric classes are exactly the excess of the orbit average
            assert 2 * a[n] - a_o[n] == sym[n]
            assert sym[n] >= 0


def test_sandwich_bounds():
    for k in (3, 7, 11):
        params = GonalParams(k)
        table = compute_b(params, 10)
        a = odd_series(params, 10, table)
        a_o = oriented_series(params, 10, table)
        for n in range(1, 11):
            assert a_o[n] >= a[n]
            assert 2 * a[n] >= a_o[n]


def test_edge_rooted_counts():
    params = GonalParams(3)
    row = odd_edge_rooted_counts(params, 3)
    # b = (1, 1, 3, 10), symmetric = (1, 1, 1, 2)
    assert [int(row[n]) for n in range(4)] == [1, 1, 2, 6]
    with pytest.raises(ValueError):
        odd_edge_rooted_counts(GonalParams(4), 3)
