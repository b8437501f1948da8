"""Unlabelled counts up to orientation-preserving symmetry.

Unrooting the edge-rooted series costs a cyclic-group average over the
k rotations of a polygon plus a correction that cancels structures
counted once per edge.  On series level:

    a_o(x) = b(x) + (x/k) * sum over divisors d>1 of k of
             phi(d) * b^{k/d}(x^d)
           - ((k-1)/k) * x * b^k(x)

Every coefficient must come out a non-negative integer; the division by
k has no remainder exactly when b is correct, so the assertion doubles
as a consistency check on the whole pipeline.
"""

from __future__ import annotations

from fractions import Fraction

from kgonal.bseries import BTable, GonalParams, compute_b
from kgonal.series import Series

__all__ = ["euler_phi", "oriented_series"]


def euler_phi(d: int) -> int:
    """Euler totient by trial factorization."""
    if d < 1:
        raise ValueError("d must be >= 1")
    result = d
    q = 2
    while q * q <= d:
        if d % q == 0:
            while d % q == 0:
                d //= q
            result -= result // q
        q += 1
    if d > 1:
        result -= result // d
    return result


def oriented_series(params: GonalParams, order: int, table: BTable | None = None) -> Series:
    """Series of oriented unlabelled counts a_{o,n} up to `order`."""
    if table is None:
        table = compute_b(params, order)
    if table.params != params or table.order < order:
        raise ValueError("table does not cover the request")
    k = params.k
    n_max = table.order
    acc = table.power(1)
    for d in range(2, k + 1):
        if k % d == 0:
            term = table.power(k // d).substitute_power(d).shift(1)
            acc = acc + term.scale(Fraction(euler_phi(d), k))
    acc = acc - table.power(k).shift(1).scale(Fraction(k - 1, k))
    out = acc.truncate(order)
    for n, c in enumerate(out.coeffs):
        if c.denominator != 1 or c < 0:
            raise AssertionError(f"oriented count at n={n} is not a non-negative integer: {c}")
    return out
