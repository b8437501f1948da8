"""Labelled counts in closed form, and fixed points under relabelling.

Labelled k-gonal 2-trees on n polygons have m = (k-1)n+1 edges.  Rooting
at an oriented edge gives exactly m^{n-1} structures, and the other
labelled families follow by dividing out the root choices and averaging
over the order-2 reflection.  Averaging over all relabellings instead
recovers the unlabelled b_n; the per-cycle-type fixed point counts
needed for that sum also have a closed form, which is what burnside_b
exercises as an independent route to b.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from kgonal.bseries import GonalParams
from kgonal.partitions import multiplicities, partitions

__all__ = [
    "CycleType",
    "labelled_rooted",
    "fixed_point_count",
    "labelled_oriented",
    "labelled_unoriented",
    "burnside_b",
]


@dataclass(frozen=True)
class CycleType:
    """Cycle type of a permutation; counts[i-1] cycles of length i."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.counts):
            raise ValueError("cycle counts must be non-negative")

    @staticmethod
    def from_parts(parts: tuple[int, ...]) -> CycleType:
        if not parts:
            return CycleType(())
        out = [0] * max(parts)
        for part in parts:
            out[part - 1] += 1
        return CycleType(tuple(out))

    @staticmethod
    def identity(n: int) -> CycleType:
        return CycleType((n,)) if n else CycleType(())

    @property
    def weight(self) -> int:
        return sum(i * c for i, c in enumerate(self.counts, start=1))

    def count(self, i: int) -> int:
        return self.counts[i - 1] if 1 <= i <= len(self.counts) else 0

    def sigma(self, i: int, drop_own: bool = False) -> int:
        """sum of d * (d-cycle count) over divisors d of i; optionally d < i only."""
        acc = 0
        for d in range(1, i + 1):
            if i % d == 0 and not (drop_own and d == i):
                acc += d * self.count(d)
        return acc


def labelled_rooted(params: GonalParams, n: int) -> int:
    """Structures rooted at an oriented labelled edge: m^{n-1}; 1 for n=0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    return params.m(n) ** (n - 1)


def fixed_point_count(params: GonalParams, t: CycleType) -> int:
    """Oriented-edge-rooted structures fixed by a relabelling of type t.

    Product over cycle lengths i with at least one i-cycle of

        (1 + (k-1) s_i)^{n_i - 1} * (1 + (k-1) s*_i)

    where s_i sums d * n_d over divisors d of i and s*_i drops the d = i
    term.  Lengths with n_i = 0 contribute factor 1 (s_i = s*_i there,
    so the pair would cancel anyway).
    """
    km1 = params.k - 1
    acc = 1
    for i in range(1, len(t.counts) + 1):
        n_i = t.count(i)
        if n_i == 0:
            continue
        acc *= (1 + km1 * t.sigma(i)) ** (n_i - 1) * (1 + km1 * t.sigma(i, drop_own=True))
    return acc


def labelled_oriented(params: GonalParams, n: int) -> int:
    """Oriented classes: m^{n-2} for n >= 2; single class for n in {0,1}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n < 2:
        return 1
    return params.m(n) ** (n - 2)


def labelled_unoriented(params: GonalParams, n: int) -> int:
    """Unoriented classes, by parity of k.

    Odd k:  (m^{n-2} + 1) / 2.
    Even k: (m^{n-2} + (n+1)^{n-2}) / 2, the second term counting the
    reflection-symmetric structures through their edge-edge axis trees.
    Both hold for n >= 2; n in {0,1} is a single class.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n < 2:
        return 1
    m_pow = params.m(n) ** (n - 2)
    sym = 1 if params.k % 2 == 1 else (n + 1) ** (n - 2)
    total = m_pow + sym
    assert total % 2 == 0
    return total // 2


def burnside_b(params: GonalParams, n: int) -> int:
    """b_n as the average of fixed-point counts over all cycle types.

    Independent of the series route: sums fixed_point_count(t) / z(t)
    over the partitions t of n, with z the usual centralizer size
    prod_i i^{n_i} n_i!.  The sum must come out integral.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    total = Fraction(0)
    for parts in partitions(n):
        t = CycleType.from_parts(parts)
        z = 1
        for i, n_i in multiplicities(parts).items():
            fact = 1
            for a in range(2, n_i + 1):
                fact *= a
            z *= i**n_i * fact
        total += Fraction(fixed_point_count(params, t), z)
    assert total.denominator == 1, f"Burnside average not integral at n={n}"
    return int(total)
