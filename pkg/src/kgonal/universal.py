"""Coefficients of the large-p expansion of the singularity.

The singularity admits xi_p = sum_{m>=1} c_m / p^m with coefficients
c_m independent of p, each a finite rational combination of powers of
1/e.  The working formula sums over partitions mu with every part at
least 2 and |mu| - length(mu) = m - 1 (equivalently, over partitions
lambda of m-1 after adding 1 to every part):

    c_m = sum over mu of (1/n) e^{-n}
          * prod_{i>=2, n_i>0} (s_i - n)^{n_i - 1} (s*_i - n)
          / prod_{i>=2} i^{n_i} n_i!

with n = |mu| + 1, n_i the multiplicity of i in mu, s_i the divisor sum
over d | i of d n_d, and s*_i the same sum without d = i.  Values are
kept symbolically as {n: rational} maps of e^{-n} coefficients, so
comparisons against published closed forms are exact and independent of
float precision.

A naive alternative reading (partitions of m itself, with the same
factors) does not reproduce the published constants from c_3 on; the
partition-shift form above reproduces all of them and sums to the
directly solved singularity, so it is the one implemented.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from mpmath import exp as mp_exp
from mpmath import mp, mpf

from kgonal.partitions import multiplicities, partitions

__all__ = [
    "PartitionMu",
    "partitions_with_min_part_2",
    "UniversalConstant",
    "universal_c",
    "xi_from_expansion",
]


@dataclass(frozen=True)
class PartitionMu:
    """A partition with all parts >= 2, in non-increasing order."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(a < 2 for a in self.parts):
            raise ValueError("every part must be >= 2")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be non-increasing")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def counts(self) -> dict[int, int]:
        return multiplicities(self.parts)

    def divisor_sum(self, i: int, drop_own: bool = False) -> int:
        counts = self.counts
        acc = 0
        for d in range(2, i + 1):
            if i % d == 0 and not (drop_own and d == i):
                acc += d * counts.get(d, 0)
        return acc


def partitions_with_min_part_2(total: int) -> Iterator[PartitionMu]:
    """All partitions of `total` into parts >= 2."""
    if total == 0:
        yield PartitionMu(())
        return
    for parts in partitions(total, min_part=2):
        yield PartitionMu(parts)


@dataclass(frozen=True)
class UniversalConstant:
    """c_m as an exact combination of e^{-n} terms."""

    m: int
    terms: tuple[tuple[int, Fraction], ...]  # (n, coefficient), n descending

    def coefficient(self, n: int) -> Fraction:
        for key, value in self.terms:
            if key == n:
                return value
        return Fraction(0)

    def closed_form(self) -> str:
        """Human-readable form like '1/8*exp(-5) - 1/3*exp(-4)'."""
        if not self.terms:
            return "0"
        pieces = []
        for n, coeff in self.terms:
            magnitude = abs(coeff)
            body = f"exp(-{n})" if magnitude == 1 else f"{magnitude}*exp(-{n})"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def value(self, dps: int = 30) -> mpf:
        with mp.workdps(dps):
            acc = mpf(0)
            for n, coeff in self.terms:
                acc += mpf(coeff.numerator) / coeff.denominator * mp_exp(-n)
            return acc

    def as_float(self, dps: int = 30) -> float:
        return float(self.value(dps))


def universal_c(m: int) -> UniversalConstant:
    """The m-th expansion coefficient, exactly."""
    if m < 1:
        raise ValueError("m must be >= 1")
    acc: dict[int, Fraction] = {}
    for small in partitions(m - 1, min_part=1):
        mu = PartitionMu(tuple(part + 1 for part in small))
        n = mu.size + 1
        numerator = 1
        denominator = n
        for i, n_i in mu.counts.items():
            s_i = mu.divisor_sum(i)
            s_star = mu.divisor_sum(i, drop_own=True)
            numerator *= (s_i - n) ** (n_i - 1) * (s_star - n)
            fact = 1
            for a in range(2, n_i + 1):
                fact *= a
            denominator *= i**n_i * fact
        acc[n] = acc.get(n, Fraction(0)) + Fraction(numerator, denominator)
    terms = tuple(sorted(((n, c) for n, c in acc.items() if c != 0), reverse=True))
    return UniversalConstant(m, terms)


def xi_from_expansion(p: int, m_max: int, dps: int = 30) -> float:
    """Partial sum sum_{m<=m_max} c_m / p^m."""
    if p < 1:
        raise ValueError("p must be >= 1")
    with mp.workdps(dps):
        acc = mpf(0)
        for m in range(1, m_max + 1):
            acc += universal_c(m).value(dps) / mpf(p) ** m
        return float(acc)
