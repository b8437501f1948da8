"""Integer kernel backends: anchors and backend agreement."""

import pytest

from kgonal import _kernels_py, kernels
from kgonal.series import Series


def test_backend_reported():
    assert kernels.BACKEND in ("compiled", "python")


def test_solve_b_anchors():
    assert _kernels_py.solve_b(1, 8) == [1, 1, 2, 4, 9, 20, 48, 115, 286]
    assert _kernels_py.solve_b(2, 8) == [1, 1, 3, 10, 39, 160, 702, 3177, 14830]
    assert _kernels_py.solve_b(3, 4) == [1, 1, 4, 19, 107]


def test_solve_b_validation():
    with pytest.raises(ValueError):
        _kernels_py.solve_b(0, 5)
    with pytest.raises(ValueError):
        _kernels_py.solve_b(2, -1)


def test_backends_agree():
    for p in (1, 2, 3, 5, 11):
        assert kernels.solve_b(p, 40) == _kernels_py.solve_b(p, 40)
    a = list(range(1, 12))
    b = [3, 1, 4, 1, 5, 9, 2, 6]
    assert kernels.convolve(a, b, 15) == _kernels_py.convolve(a, b, 15)
    assert kernels.power(a, 4, 10) == _kernels_py.power(a, 4, 10)


def test_convolve_short_operands():
    # truncation order may exceed the data; missing coefficients are zero
    assert _kernels_py.convolve([1, 1], [1, 1], 4) == [1, 2, 1, 0, 0]
    assert _kernels_py.convolve([2], [3, 4], 2) == [6, 8, 0]


def test_power_matches_series_pow():
    coeffs = [1, 1, 3, 10, 39]
    got = _kernels_py.power(coeffs, 3, 4)
    want = Series.from_coeffs(coeffs, 4).pow(3)
    assert got == [int(c) for c in want.coeffs]
    assert _kernels_py.power(coeffs, 0, 3) == [1, 0, 0, 0]
