# cython: language_level=3
"""Compiled integer kernels; the arithmetic twin of _kernels_py.

Coefficients are arbitrary-size Python ints, so the win over the pure
interpreter comes from compiled loop control and indexing, not from
machine integers.  Keep this file line-for-line comparable with
_kernels_py.py; tests assert the two backends agree exactly.
"""


def solve_b(int p, int order):
    """Coefficients y_0..y_order of y = exp(sum_i x^i y^p(x^i)/i).

    Same derivation as the fallback: x y'/y expands through divisor sums
    of the coefficients of C = y^p, and C is updated with the power rule
    y C' = p y' C instead of repeated multiplication.
    """
    cdef int n, e, m, i
    cdef list y, c, h
    if p < 1:
        raise ValueError("p must be >= 1")
    if order < 0:
        raise ValueError("order must be >= 0")
    y = [0] * (order + 1)
    c = [0] * (order + 1)
    y[0] = 1
    c[0] = 1
    h = [0] * (order + 1)
    for n in range(1, order + 1):
        hn = 0
        for e in range(1, n + 1):
            if n % e == 0:
                hn = hn + e * c[e - 1]
        h[n] = hn
        acc = 0
        for m in range(1, n + 1):
            acc = acc + h[m] * y[n - m]
        q, r = divmod(acc, n)
        assert r == 0, f"y recurrence not exact at n={n}"
        y[n] = q
        acc = 0
        for i in range(1, n + 1):
            acc = acc + ((p + 1) * i - n) * y[i] * c[n - i]
        q, r = divmod(acc, n)
        assert r == 0, f"power update not exact at n={n}"
        c[n] = q
    return y


def convolve(list a, list b, int order):
    """Truncated Cauchy product of integer coefficient lists."""
    cdef int n, i, lo, hi, la, lb
    cdef list out
    if order < 0:
        raise ValueError("order must be >= 0")
    la = len(a)
    lb = len(b)
    out = [0] * (order + 1)
    for n in range(order + 1):
        acc = 0
        lo = n - lb + 1
        if lo < 0:
            lo = 0
        hi = n
        if hi > la - 1:
            hi = la - 1
        for i in range(lo, hi + 1):
            acc = acc + a[i] * b[n - i]
        out[n] = acc
    return out


def power(list a, int e, int order):
    """a**e truncated at `order`, by binary exponentiation."""
    cdef list result, base
    if e < 0:
        raise ValueError("exponent must be >= 0")
    result = [0] * (order + 1)
    result[0] = 1
    base = list(a[: order + 1])
    while e:
        if e & 1:
            result = convolve(result, base, order)
        e >>= 1
        if e:
            base = convolve(base, base, order)
    return result
