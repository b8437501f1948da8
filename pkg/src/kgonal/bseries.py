"""The fundamental edge-rooted series b(x) and its convolution powers.

b_n counts unlabelled k-gonal 2-trees rooted at an oriented edge and
built from n polygons.  Every other counting module consumes b through
the BTable produced here: the series itself, its powers b^j, and the
half-index coefficient convention (fractional or negative indices read
as zero).

Two independent routes to b are provided.  compute_b solves the
exponential fixed point y = exp(sum_i x^i y^{k-1}(x^i)/i) through the
integer kernel and is fast; recurrence_crosscheck expands the same
counts by literal (k-1)-tuple sums with a divisibility side condition
and is kept deliberately naive as a test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from kgonal import cache, kernels
from kgonal.series import Series

__all__ = [
    "GonalParams",
    "BTable",
    "compute_b",
    "convolution_power",
    "half_index_coeff",
    "recurrence_crosscheck",
]


@dataclass(frozen=True)
class GonalParams:
    """Polygon size k; k=2 is the degenerate ordinary-tree case."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError("polygon size k must be >= 2")

    @property
    def p(self) -> int:
        """Non-root edges per polygon."""
        return self.k - 1

    def m(self, n: int) -> int:
        """Edge count of a structure with n polygons."""
        return (self.k - 1) * n + 1


@dataclass
class BTable:
    """b to a fixed order plus a write-once cache of its powers.

    The power cache maps exponent j to the Series b^j.  Insertions are
    idempotent (always the same value for the same j), so concurrent
    lookup and insert are harmless under the interpreter lock.
    """

    params: GonalParams
    order: int
    b: Series
    power_cache: dict[int, Series] = field(default_factory=dict)
    _int_powers: dict[int, list[int]] = field(default_factory=dict, repr=False)

    def int_coeffs(self, j: int = 1) -> list[int]:
        """Coefficients of b^j as plain ints, memoized per exponent."""
        if j < 0:
            raise ValueError("exponent must be >= 0")
        got = self._int_powers.get(j)
        if got is None:
            if j == 0:
                got = [1] + [0] * self.order
            elif j == 1:
                got = [int(c) for c in self.b.coeffs]
            else:
                got = kernels.convolve(self.int_coeffs(j - 1), self.int_coeffs(1), self.order)
            self._int_powers[j] = got
        return got

    def power(self, j: int) -> Series:
        got = self.power_cache.get(j)
        if got is None:
            got = Series.from_coeffs(self.int_coeffs(j), self.order)
            self.power_cache[j] = got
        return got

    def coeff(self, j: int, r: int | Fraction) -> int:
        """b^j coefficient at a possibly fractional index; see half_index_coeff."""
        r = Fraction(r)
        if r < 0 or r.denominator != 1:
            return 0
        i = int(r)
        if i > self.order:
            raise IndexError(f"index {i} beyond table order {self.order}")
        return self.int_coeffs(j)[i]


def compute_b(params: GonalParams, order: int, cache_dir: Path | None = None) -> BTable:
    """Build the table, optionally through the advisory disk cache."""
    coeffs: list[int] | None = None
    if cache_dir is not None:
        coeffs = cache.load_b(cache_dir, params.k, order)
    if coeffs is None:
        coeffs = kernels.solve_b(params.p, order)
        if cache_dir is not None:
            cache.store_b(cache_dir, params.k, coeffs)
    assert coeffs[0] == 1
    table = BTable(params, order, Series.from_coeffs(coeffs, order))
    table._int_powers[1] = [int(c) for c in coeffs]
    return table


def convolution_power(table: BTable, j: int) -> Series:
    """b^j at the table's order, memoized in the table."""
    return table.power(j)


def half_index_coeff(table: BTable, j: int, r: int | Fraction) -> int:
    """Coefficient of x^r in b^j, with 0 for negative or non-integral r.

    Counting formulas below index b at expressions like (n-1)/2 or
    (n-2)/4; terms whose index fails to be a non-negative integer simply
    do not occur, which this convention encodes.  An integral index past
    the table order raises instead, since silence there would hide a
    truncation bug.
    """
    return table.coeff(j, r)


def recurrence_crosscheck(params: GonalParams, order: int) -> Series:
    """b by the explicit tuple recurrence; test oracle only.

    n b_n = sum over j = 1..n and over ordered (k-1)-tuples a of
    non-negative integers such that |a|+1 divides j, of
    (|a|+1) * b_{a_1} * ... * b_{a_{k-1}} * b_{n-j}.

    The tuple sum is evaluated by direct recursion with no shared power
    tables, so agreement with compute_b crosses two genuinely different
    arithmetic routes.  Feasible for small orders only: the inner sum
    alone costs O(order^{k-1}) per coefficient.
    """
    parts = params.p
    b: list[int] = [1]

    def tuple_sum(remaining: int, total: int) -> int:
        # sum over ordered tuples of `remaining` indices summing to `total`
        if remaining == 0:
            return 1 if total == 0 else 0
        acc = 0
        for a in range(total + 1):
            acc += b[a] * tuple_sum(remaining - 1, total - a)
        return acc

    for n in range(1, order + 1):
        acc = 0
        for j in range(1, n + 1):
            for e in range(1, j + 1):
                if j % e == 0:
                    acc += e * tuple_sum(parts, e - 1) * b[n - j]
        q, r = divmod(acc, n)
        assert r == 0, f"tuple recurrence not exact at n={n}"
        b.append(q)
    return Series.from_coeffs(b, order)
