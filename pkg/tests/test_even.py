"""Unlabelled counts for even k: system tables, pinned rows, identities."""

from fractions import Fraction

import pytest

from kgonal.bseries import GonalParams, compute_b, half_index_coeff
from kgonal.even import edge_rooted_counts, even_series, symmetric_system, totally_symmetric
from kgonal.oriented import oriented_series


def test_rejects_odd_k():
    with pytest.raises(ValueError):
        even_series(GonalParams(3), 5)
    with pytest.raises(ValueError):
        totally_symmetric(GonalParams(5), 5)


def test_k4_totally_symmetric_tables():
    pi, beta = totally_symmetric(GonalParams(4), 4)
    assert pi == (0, 1, 1, 3, 6)
    assert beta == (1, 1, 2, 5, 12)


def test_k4_system_tables():
    sym = symmetric_system(GonalParams(4), 4)
    assert sym.alpha == (1, 1, 2, 5, 13)
    assert sym.p_m == (0, 0, 0, 0, 0)
    assert sym.p_al == (0, 0, 0, 0, 1)
    assert sym.omega == (0, 1, 1, 3, 7)
    assert sym.alpha_sq == (1, 2, 5, 14, 40)


def test_k4_edge_rooted():
    got = edge_rooted_counts(GonalParams(4), 3)
    assert [int(c) for c in got.coeffs] == [1, 1, 3, 12]
    assert int(edge_rooted_counts(GonalParams(6), 1)[1]) == 1


def test_k4_row():
    got = even_series(GonalParams(4), 6)
    assert [int(c) for c in got.coeffs] == [1, 1, 1, 3, 8, 32, 141]


def test_k6_row_prefix():
    got = even_series(GonalParams(6), 5)
    assert [int(c) for c in got.coeffs] == [1, 1, 1, 4, 16, 103]


def test_k2_degenerates_to_free_trees():
    got = even_series(GonalParams(2), 10)
    assert [int(c) for c in got.coeffs] == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235]


def test_alpha_parity_and_bound():
    for k in (2, 4, 6, 8):
        params = GonalParams(k)
        table = compute_b(params, 12)
        sym = symmetric_system(params, 12, table)
        for n in range(13):
            b_n = int(table.b[n])
            assert sym.alpha[n] <= b_n
            assert (b_n + sym.alpha[n]) % 2 == 0
            assert sym.pi[n] <= sym.omega[n]


def test_unrooting_identity():
    # the combination defining a_n, cleared of denominators, is an exact
    # integer identity among the tables
    for k in (2, 4, 6):
        params = GonalParams(k)
        table = compute_b(params, 12)
        a = even_series(params, 12, table)
        a_o = oriented_series(params, 12, table)
        sym = symmetric_system(params, 12, table)
        half = (k - 2) // 2
        for n in range(13):
            lhs = 4 * int(a[n]) - 2 * int(a_o[n]) - 2 * sym.alpha[n]
            lhs -= half_index_coeff(table, k // 2, Fraction(n - 1, 2))
            lhs += sum(
                sym.alpha_sq[i] * half_index_coeff(table, half, Fraction(n - 1 - i, 2))
                for i in range(n)
            )
            assert lhs == 0, (k, n)


def test_sandwich_bounds():
    for k in (2, 4, 10):
        params = GonalParams(k)
        table = compute_b(params, 10)
        a = even_series(params, 10, table)
        a_o = oriented_series(params, 10, table)
        for n in range(1, 11):
            assert a_o[n] >= a[n]
            assert 2 * a[n] >= a_o[n]
