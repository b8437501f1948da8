"""Backend selection for the integer kernels.

Prefers the compiled extension, falls back to the pure-Python module.
KGONAL_PURE_PYTHON=1 forces the fallback, which is occasionally useful
for timing comparisons and for debugging the extension itself.
"""

from __future__ import annotations

import os

if os.environ.get("KGONAL_PURE_PYTHON") == "1":
    from kgonal import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from kgonal import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from kgonal import _kernels_py as _impl

        BACKEND = "python"

solve_b = _impl.solve_b
convolve = _impl.convolve
power = _impl.power

__all__ = ["BACKEND", "solve_b", "convolve", "power"]
