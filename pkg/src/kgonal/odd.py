"""Unlabelled counts for odd polygon size, reflections included.

For odd k each polygon has one edge-to-vertex symmetry axis, and the
reflection-symmetric structures admit their own product form: pages off
the axis pair up, pages on the axis split into half-page combinations
of size (k-1)/2.  That makes the symmetric classes an exponential of an
explicit combination of b at doubled and quadrupled arguments, and the
final count is the usual group average

    a(x) = (a_o(x) + s(x)) / 2

with s the symmetric-class series.  A divisor-sum recurrence for the
same numbers is implemented independently as a cross-check; the two
routes share nothing past the b table.
"""

from __future__ import annotations

from fractions import Fraction

from kgonal.bseries import BTable, GonalParams, compute_b, half_index_coeff
from kgonal.oriented import oriented_series
from kgonal.series import Series, exp

__all__ = [
    "odd_omega",
    "odd_symmetric_series",
    "odd_series",
    "odd_recurrence",
    "odd_edge_rooted_counts",
]


def _require_odd(params: GonalParams) -> None:
    if params.k % 2 == 0:
        raise ValueError("polygon size is even; use the even-parity module")


def odd_symmetric_series(params: GonalParams, order: int, table: BTable | None = None) -> Series:
    """Series of reflection-symmetric classes; coefficients are counts."""
    _require_odd(params)
    if table is None:
        table = compute_b(params, order)
    if table.params != params or table.order < order:
        raise ValueError("table does not cover the request")
    n_max = table.order
    half = (params.k - 1) // 2
    b_half = table.power(half)
    b_full = table.power(params.k - 1)
    exponent = Series.zero(n_max)
    for i in range(1, n_max + 1):
        term = b_half.substitute_power(2 * i).shift(i).scale(Fraction(2, 2 * i))
        if 2 * i <= n_max:
            term = term + b_full.substitute_power(2 * i).shift(2 * i).scale(Fraction(1, 2 * i))
            term = term - b_half.substitute_power(4 * i).shift(2 * i).scale(Fraction(1, 2 * i))
        exponent = exponent + term
    sym = exp(exponent).truncate(order)
    for n, c in enumerate(sym.coeffs):
        if c.denominator != 1 or c < 0:
            raise AssertionError(f"symmetric count at n={n} is not a non-negative integer: {c}")
    return sym


def odd_series(params: GonalParams, order: int, table: BTable | None = None) -> Series:
    """Unlabelled counts a_n for odd k, as half the orbit sum."""
    _require_odd(params)
    if table is None:
        table = compute_b(params, order)
    a_o = oriented_series(params, order, table)
    sym = odd_symmetric_series(params, order, table)
    out = (a_o + sym).scale(Fraction(1, 2))
    for n, c in enumerate(out.coeffs):
        if c.denominator != 1 or c < 0:
            raise AssertionError(f"count at n={n} is not a non-negative integer: {c}")
    return out


def odd_edge_rooted_counts(params: GonalParams, order: int, table: BTable | None = None) -> Series:
    """Unlabelled edge-rooted counts (b_n + s_n)/2 for odd k.

    The symmetric classes double as the reversal-fixed edge-rooted
    structures: the symmetry axis pins a canonical root edge.
    """
    _require_odd(params)
    if table is None:
        table = compute_b(params, order)
    sym = odd_symmetric_series(params, order, table)
    out = []
    for n in range(order + 1):
        total = table.coeff(1, n) + int(sym[n])
        assert total % 2 == 0, f"b_n + s_n odd at n={n}"
        out.append(total // 2)
    return Series.from_coeffs(out, order)


def odd_omega(params: GonalParams, n: int, table: BTable) -> int:
    """Divisor-sum weight for the recurrence route.

    w_n = 2 b^{(k-1)/2} at (n-1)/2 + b^{k-1} at (n-2)/2
        - b^{(k-1)/2} at (n-2)/4, fractional indices reading zero.
    """
    _require_odd(params)
    if n < 1:
        raise ValueError("n must be >= 1")
    half = (params.k - 1) // 2
    return (
        2 * half_index_coeff(table, half, Fraction(n - 1, 2))
        + half_index_coeff(table, params.k - 1, Fraction(n - 2, 2))
        - half_index_coeff(table, half, Fraction(n - 2, 4))
    )


def odd_recurrence(params: GonalParams, order: int, table: BTable | None = None) -> Series:
    """Same counts through the divisor-sum recurrence; test oracle.

    a_0 = 1 and for n >= 1

        a_n = (1/2n) sum_{j=1}^{n} (sum_{l|j} l w_l)
                      (a_{n-j} - a_{o,n-j}/2)  +  a_{o,n}/2.
    """
    _require_odd(params)
    if table is None:
        table = compute_b(params, order)
    a_o = oriented_series(params, order, table)
    w = [0] * (order + 1)
    for n in range(1, order + 1):
        w[n] = odd_omega(params, n, table)
    divsum = [0] * (order + 1)
    for j in range(1, order + 1):
        divsum[j] = sum(l * w[l] for l in range(1, j + 1) if j % l == 0)
    a: list[Fraction] = [Fraction(1)] + [Fraction(0)] * order
    for n in range(1, order + 1):
        s = Fraction(0)
        for j in range(1, n + 1):
            s += divsum[j] * (a[n - j] - Fraction(1, 2) * a_o[n - j])
        a[n] = s / (2 * n) + Fraction(1, 2) * a_o[n]
        assert a[n].denominator == 1 and a[n] >= 0, f"recurrence count at n={n}: {a[n]}"
    return Series(order, tuple(a))
