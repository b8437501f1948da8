"""Unlabelled counts for even polygon size, reflections included.

For even k a reflection axis can leave a whole page fixed (totally
symmetric), pass through a page sideways (mixed), or swap a page with a
mirror twin glued along the axis (alternated pair).  The code follows
that case split through a small triangular system of integer tables:

    pi    polygon-rooted totally symmetric structures
    beta  auxiliary series with x beta' / beta matching pi's divisor sums
    p_m   mixed pages at the root
    p_al  alternated page pairs at the root (even n only)
    omega pi + p_al + p_m, the per-size page weight
    alpha reflection-fixed edge-rooted structures

The per-n evaluation order inside symmetric_system matters: p_m at n
uses alpha below n, p_al at n uses p_m at n/2, omega closes over both,
and alpha at n consumes omega up to n.  Any other order would read a
slot before it is written.

Edge-rooted counts are then (b_n + alpha_n)/2, and the unrooted counts
combine the oriented series, alpha, and two correction convolutions
that cancel the per-edge and per-vertex overcounts:

    a_n = a_{o,n}/2 + alpha_n/2 + b^{(k/2)}_{(n-1)/2}/4
          - (1/4) sum_{i+j=n-1} (alpha^2)_i b^{((k-2)/2)}_{j/2}.

k = 2 degenerates gracefully: the exponent (k-2)/2 = 0 makes the half
power the constant series 1, and the outputs become the counts of free
trees by edge count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from kgonal.bseries import BTable, GonalParams, compute_b, half_index_coeff
from kgonal.kernels import convolve
from kgonal.oriented import oriented_series
from kgonal.series import Series

__all__ = [
    "EvenSymTables",
    "totally_symmetric",
    "symmetric_system",
    "edge_rooted_counts",
    "even_series",
]


def _require_even(params: GonalParams) -> None:
    if params.k % 2 == 1:
        raise ValueError("polygon size is odd; use the odd-parity module")


@dataclass(frozen=True)
class EvenSymTables:
    """Integer tables of the reflection-symmetry system for even k."""

    params: GonalParams
    order: int
    pi: tuple[int, ...]
    beta: tuple[int, ...]
    p_m: tuple[int, ...]
    p_al: tuple[int, ...]
    omega: tuple[int, ...]
    alpha: tuple[int, ...]
    alpha_sq: tuple[int, ...]

    def __post_init__(self) -> None:
        assert self.pi[0] == 0 and self.beta[0] == 1 and self.alpha[0] == 1
        assert all(self.p_al[n] == 0 for n in range(1, self.order + 1, 2))
        for name in ("pi", "beta", "p_m", "p_al", "omega", "alpha", "alpha_sq"):
            assert all(v >= 0 for v in getattr(self, name)), f"negative entry in {name}"


def totally_symmetric(
    params: GonalParams, order: int, table: BTable | None = None
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The pi and beta tables, advanced jointly in n.

    pi_n sums b^{(k-2)/2} at i/2 times beta_{n-1-i} over even i, so pi
    at n needs beta below n; beta_n closes the loop through

        n beta_n = sum_{j<n} beta_j * sum_{d | n-j} d pi_d

    which needs pi up to n.  Interleaving the two recurrences per n is
    therefore mandatory, not a style choice.
    """
    _require_even(params)
    if table is None:
        table = compute_b(params, order)
    if table.params != params or table.order < order:
        raise ValueError("table does not cover the request")
    half = (params.k - 2) // 2
    pi = [0] * (order + 1)
    beta = [0] * (order + 1)
    beta[0] = 1
    for n in range(1, order + 1):
        acc = 0
        for i in range(0, n, 2):
            acc += half_index_coeff(table, half, i // 2) * beta[n - 1 - i]
        pi[n] = acc
        s = 0
        for j in range(n):
            s += beta[j] * sum(d * pi[d] for d in range(1, n - j + 1) if (n - j) % d == 0)
        q, r = divmod(s, n)
        assert r == 0, f"beta recurrence not exact at n={n}"
        beta[n] = q
    return tuple(pi), tuple(beta)


def symmetric_system(params: GonalParams, order: int, table: BTable | None = None) -> EvenSymTables:
    """Solve the full reflection system; see the module docstring for order."""
    _require_even(params)
    if table is None:
        table = compute_b(params, order)
    pi, beta = totally_symmetric(params, order, table)
    half = (params.k - 2) // 2
    p_m = [0] * (order + 1)
    p_al = [0] * (order + 1)
    omega = [0] * (order + 1)
    alpha = [0] * (order + 1)
    alpha[0] = 1
    for n in range(1, order + 1):
        acc = 0
        for i in range(0, n, 2):
            acc += half_index_coeff(table, half, i // 2) * alpha[n - 1 - i]
        p_m[n] = acc - pi[n]
        assert p_m[n] >= 0, f"mixed-page count negative at n={n}"
        if n % 2 == 0:
            v = half_index_coeff(table, params.k - 1, Fraction(n - 2, 2)) - pi[n // 2] - p_m[n // 2]
            q, r = divmod(v, 2)
            assert r == 0 and q >= 0, f"alternated-pair count bad at n={n}: {v}"
            p_al[n] = q
        omega[n] = pi[n] + p_al[n] + p_m[n]
        s = 0
        for i in range(1, n + 1):
            s += sum(d * omega[d] for d in range(1, i + 1) if i % d == 0) * alpha[n - i]
        q, r = divmod(s, n)
        assert r == 0, f"alpha recurrence not exact at n={n}"
        alpha[n] = q
    alpha_sq = convolve(alpha, alpha, order)
    return EvenSymTables(
        params,
        order,
        tuple(pi),
        tuple(beta),
        tuple(p_m),
        tuple(p_al),
        tuple(omega),
        tuple(alpha),
        tuple(alpha_sq),
    )


def edge_rooted_counts(
    params: GonalParams, order: int, table: BTable | None = None, sym: EvenSymTables | None = None
) -> Series:
    """Unlabelled edge-rooted counts (b_n + alpha_n)/2 for even k."""
    _require_even(params)
    if table is None:
        table = compute_b(params, order)
    if sym is None:
        sym = symmetric_system(params, order, table)
    out = []
    for n in range(order + 1):
        total = table.coeff(1, n) + sym.alpha[n]
        assert total % 2 == 0, f"b_n + alpha_n odd at n={n}"
        out.append(total // 2)
    return Series.from_coeffs(out, order)


def even_series(params: GonalParams, order: int, table: BTable | None = None) -> Series:
    """Unlabelled counts a_n for even k."""
    _require_even(params)
    if table is None:
        table = compute_b(params, order)
    a_o = oriented_series(params, order, table)
    sym = symmetric_system(params, order, table)
    half = (params.k - 2) // 2
    out = []
    for n in range(order + 1):
        v = Fraction(a_o[n] + sym.alpha[n], 2)
        v += Fraction(half_index_coeff(table, params.k // 2, Fraction(n - 1, 2)), 4)
        corr = 0
        for i in range(n):
            corr += sym.alpha_sq[i] * half_index_coeff(table, half, Fraction(n - 1 - i, 2))
        v -= Fraction(corr, 4)
        assert v.denominator == 1 and v >= 0, f"count at n={n} is not a non-negative integer: {v}"
        out.append(int(v))
    return Series.from_coeffs(out, order)
