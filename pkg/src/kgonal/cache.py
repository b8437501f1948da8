"""Advisory disk cache for the edge-rooted coefficient tables.

One JSON document per polygon size k, holding coefficients as decimal
strings so arbitrary-size integers survive the round trip.  The cache is
strictly advisory: anything missing, unreadable, version-skewed, or
shorter than the request is treated as a miss and recomputed.  Nothing
in this module ever raises on a bad cache file.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

CACHE_VERSION = 1
ENV_VAR = "KGONAL_CACHE"

__all__ = ["CACHE_VERSION", "ENV_VAR", "resolve_cache_dir", "load_b", "store_b"]


def resolve_cache_dir(flag_value: str | None) -> Path | None:
    """Explicit flag wins, then the KGONAL_CACHE variable, then no cache."""
    if flag_value:
        return Path(flag_value)
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return None


def _path(cache_dir: Path, k: int) -> Path:
    return cache_dir / f"b_k{k}.json"


def load_b(cache_dir: Path, k: int, order: int) -> list[int] | None:
    """Stored coefficients b_0..b_order, or None on any kind of miss."""
    try:
        with open(_path(cache_dir, k), encoding="utf-8") as fh:
            doc = json.load(fh)
        if doc.get("version") != CACHE_VERSION or doc.get("k") != k:
            return None
        coeffs = doc["coefficients"]
        if doc.get("order") != len(coeffs) - 1 or len(coeffs) < order + 1:
            return None
        return [int(c) for c in coeffs[: order + 1]]
    except (OSError, ValueError, KeyError, TypeError):
        return None


def store_b(cache_dir: Path, k: int, coeffs: list[int]) -> None:
    """Write the table unless an equal or longer one is already stored."""
    try:
        existing = load_b(cache_dir, k, 0)
        if existing is not None and load_b(cache_dir, k, len(coeffs) - 1) is not None:
            return
        cache_dir.mkdir(parents=True, exist_ok=True)
        doc = {
            "version": CACHE_VERSION,
            "k": k,
            "order": len(coeffs) - 1,
            "coefficients": [str(c) for c in coeffs],
        }
        tmp = _path(cache_dir, k).with_suffix(".tmp")
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(doc, fh)
        os.replace(tmp, _path(cache_dir, k))
    except OSError:
        pass
