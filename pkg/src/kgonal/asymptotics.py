"""Growth rate and amplitude constants of the counting sequences.

The edge-rooted counts grow like alpha * beta^n * n^{-3/2} and the
unrooted oriented counts like alpha_bar * beta^n * n^{-5/2}, where
beta = 1/xi and xi is the smallest positive solution of

    xi = (1/(e p)) * omega(xi)^{-p},
    omega(x) = exp( x^2 b^p(x^2)/2 + x^3 b^p(x^3)/3 + ... ),

with p = k-1.  omega consumes b only at arguments x^i for i >= 2, whose
tails die geometrically, so a truncated b table of moderate order pins
xi far beyond the printed reference precision.

All numerics run in mpmath working precision: the raw coefficients
overflow 64-bit floats long before the probe orders used here (b_n for
p=11 passes 1e308 near n = 210), and the amplitude checks want headroom
below 1e-12.

Two printed formulas for alpha_bar circulate that cannot both be exact;
the report therefore carries the product form 2 pi p^{1+2/p} xi^{2/p}
alpha^3, the ratio form as printed (whose parenthesis lacks the xi
factor its alpha analogue carries), and optionally an empirical
extrapolation from the coefficients themselves, without silently
choosing between them.  The `alpha_bar` field repeats the product form,
which agrees with the 3/2-power singular coefficient route
(3/(4 sqrt(pi))) * tau_bar3 to working precision; the agreement is
asserted at report time.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Sequence

from mpmath import e as euler_e
from mpmath import exp as mp_exp
from mpmath import mp, mpf
from mpmath import pi as mp_pi
from mpmath import sqrt as mp_sqrt

from kgonal.bseries import BTable, GonalParams

__all__ = [
    "AsymptoticReport",
    "NonConvergenceError",
    "omega_eval",
    "solve_xi",
    "constants",
    "empirical_amplitude",
    "rho",
]

DEFAULT_DPS = 30
DEFAULT_TOL = 1e-13
MAX_ITERATIONS = 10_000


class NonConvergenceError(RuntimeError):
    """The fixed-point iteration for xi missed its tolerance within the cap."""


@dataclass(frozen=True)
class AsymptoticReport:
    """Everything computed about one p, with floats for serialization."""

    p: int
    series_order: int
    xi: float
    beta: float
    tau0: float
    tau1: float
    tau2: float
    tau_bar3: float
    alpha: float
    alpha_bar: float
    alpha_bar_product_form: float
    alpha_bar_ratio_form: float
    alpha_bar_empirical: float | None
    iterations: int
    residual: float
    tolerance: float

    def to_dict(self) -> dict:
        return asdict(self)


def rho(q: int) -> mpf:
    """(q-1)^(q-1)/q^q, the singularity of the q-ary tree equation."""
    if q < 2:
        raise ValueError("q must be >= 2")
    return mpf(q - 1) ** (q - 1) / mpf(q) ** q


def _forward_value(coeffs: Sequence[int], t: mpf) -> mpf:
    """sum coeffs[n] t^n with geometric-tail cutoff; t in [0, 1)."""
    acc = mpf(0)
    tp = mpf(1)
    tiny = 0
    for n, c in enumerate(coeffs):
        term = c * tp
        acc += term
        tp *= t
        if n > 8:
            if term < mp.eps * (1 + acc):
                tiny += 1
                if tiny >= 3:
                    break
            else:
                tiny = 0
    return acc


def _forward_derivative(coeffs: Sequence[int], t: mpf) -> mpf:
    acc = mpf(0)
    tp = mpf(1)
    tiny = 0
    for n in range(1, len(coeffs)):
        term = n * coeffs[n] * tp
        acc += term
        tp *= t
        if n > 8:
            if term < mp.eps * (1 + acc):
                tiny += 1
                if tiny >= 3:
                    break
            else:
                tiny = 0
    return acc


def omega_eval(
    params: GonalParams, table: BTable, x0: float | mpf, dps: int = DEFAULT_DPS
) -> tuple[mpf, mpf]:
    """(omega(x0), omega'(x0)) from the truncated b table."""
    with mp.workdps(dps):
        x = mpf(x0)
        if not 0 <= x < 1:
            raise ValueError("omega is evaluated inside [0, 1) only")
        if x == 0:
            return mpf(1), mpf(0)
        p = params.p
        b = table.int_coeffs(1)
        exponent = mpf(0)
        slope = mpf(0)
        tiny = 0
        i = 2
        while True:
            t = x**i
            bv = _forward_value(b, t)
            bd = _forward_derivative(b, t)
            piece = t * bv**p / i
            exponent += piece
            slope += t / x * bv**p + p * t * t / x * bv ** (p - 1) * bd
            if piece < mp.eps * (1 + exponent):
                tiny += 1
                if tiny >= 3:
                    break
            else:
                tiny = 0
            i += 1
        omega = mp_exp(exponent)
        return omega, slope * omega


def solve_xi(
    params: GonalParams,
    table: BTable,
    tol: float = DEFAULT_TOL,
    dps: int = DEFAULT_DPS,
) -> tuple[mpf, int, mpf]:
    """Fixed point of x -> (1/(e p)) omega(x)^{-p}, with iteration stats.

    The map is decreasing, so plain iteration ping-pongs; averaging each
    iterate with its image damps that and converges linearly.  Start at
    the lower bound rho(p+1).  Returns (xi, iterations, residual).
    """
    p = params.p
    with mp.workdps(dps):
        x = rho(p + 1)
        tol_mp = mpf(tol)
        for iteration in range(1, MAX_ITERATIONS + 1):
            omega, _ = omega_eval(params, table, x, dps)
            fx = omega ** (-p) / (euler_e * p)
            x_next = (x + fx) / 2
            delta = abs(x_next - x)
            x = x_next
            if delta < tol_mp:
                omega, _ = omega_eval(params, table, x, dps)
                residual = abs(x - omega ** (-p) / (euler_e * p))
                upper = mpf(2) ** mpf("0.5") - 1 if p == 1 else rho(p)
                assert rho(p + 1) <= x <= upper, f"xi escaped its bracket for p={p}"
                return x, iteration, residual
        raise NonConvergenceError(
            f"p={p}: no convergence to {tol} within {MAX_ITERATIONS} iterations; last x={x}"
        )


def constants(
    params: GonalParams,
    table: BTable,
    xi: mpf,
    iterations: int = 0,
    residual: float | mpf = 0.0,
    tol: float = DEFAULT_TOL,
    dps: int = DEFAULT_DPS,
    alpha_bar_empirical: float | None = None,
) -> AsymptoticReport:
    """Assemble the full constant report at a solved xi."""
    p = params.p
    with mp.workdps(dps):
        xi = mpf(xi)
        omega, omega_prime = omega_eval(params, table, xi, dps)
        ratio = omega_prime / omega
        r = xi * ratio
        inv_p = mpf(1) / p
        tau0 = (1 / (p * xi)) ** inv_p
        tau1 = -mp_sqrt(2) * p ** (-(1 + inv_p)) * xi ** (-inv_p) * mp_sqrt(1 + p * r)
        tau2 = xi ** (-inv_p) / (3 * p ** (2 + inv_p)) * ((2 * p + 3) - p * (p - 3) * r)
        tau_bar3 = -(mpf(p) / 3) * tau1**3 / tau0**2
        alpha = (1 / mp_sqrt(2 * mp_pi)) * p ** (-(1 + inv_p)) * xi ** (-inv_p) * mp_sqrt(1 + p * r)
        product_form = 2 * mp_pi * p ** (1 + 2 * inv_p) * xi ** (2 * inv_p) * alpha**3
        ratio_form = (
            (1 / mp_sqrt(2 * mp_pi)) * p ** (-(2 + inv_p)) * xi ** (-inv_p) * (1 + p * ratio) ** mpf("1.5")
        )
        singular_route = 3 / (4 * mp_sqrt(mp_pi)) * tau_bar3
        assert abs(product_form - singular_route) <= mpf("1e-12") * product_form, (
            "product form disagrees with the singular-coefficient route"
        )
        return AsymptoticReport(
            p=p,
            series_order=table.order,
            xi=float(xi),
            beta=float(1 / xi),
            tau0=float(tau0),
            tau1=float(tau1),
            tau2=float(tau2),
            tau_bar3=float(tau_bar3),
            alpha=float(alpha),
            alpha_bar=float(product_form),
            alpha_bar_product_form=float(product_form),
            alpha_bar_ratio_form=float(ratio_form),
            alpha_bar_empirical=alpha_bar_empirical,
            iterations=iterations,
            residual=float(residual),
            tolerance=float(tol),
        )


def empirical_amplitude(
    counts: Sequence[int | float],
    xi: float | mpf,
    exponent: float,
    n_probe: int | None = None,
    dps: int = 40,
) -> float:
    """Richardson-extrapolated limit of counts[n] xi^n n^exponent.

    Probes at n, n/2 and n/4; two extrapolation stages cancel the 1/n
    and 1/n^2 corrections of the square-root singularity expansion.
    """
    n = n_probe if n_probe is not None else len(counts) - 1
    if n // 4 < 2:
        raise ValueError("need a probe index of at least 8")
    if n >= len(counts):
        raise ValueError("probe index beyond the computed counts")
    with mp.workdps(dps):
        x = mpf(xi)
        e = mpf(exponent)

        def s(m: int) -> mpf:
            return mpf(counts[m]) * x**m * mpf(m) ** e

        r1_full = 2 * s(n) - s(n // 2)
        r1_half = 2 * s(n // 2) - s(n // 4)
        return float((4 * r1_full - r1_half) / 3)
