"""Backend selection for the bitmask kernels.

The compiled extension handles windows up to 64 bits; anything wider (a
conductor past 63 — far beyond the default census bound) transparently uses
the pure-Python twin.  Set ``TRACE_FORGE_PURE_PYTHON=1`` to force the pure
backend, e.g. for benchmarking.
"""

import os

from . import _kernels_py as _py

_fast = None
if os.environ.get("TRACE_FORGE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _fast  # type: ignore[no-redef]
    except ImportError:
        _fast = None

BACKEND = "cython" if _fast is not None else "python"

_U64 = 1 << 64


def minkowski(a: int, b: int, width: int) -> int:
    if _fast is not None and width <= 64 and a < _U64 and b < _U64:
        return _fast.minkowski(a, b, width)
    return _py.minkowski(a, b, width)


def colon_window(e_mask: int, f_mask: int, c: int) -> int:
    if _fast is not None and c < 64:
        return _fast.colon_window(e_mask, f_mask, c)
    return _py.colon_window(e_mask, f_mask, c)


def addition_closed(mask: int, width: int) -> bool:
    if _fast is not None and width <= 64 and mask < _U64:
        return _fast.addition_closed(mask, width)
    return _py.addition_closed(mask, width)


def ideal_closed(s_mask: int, h_mask: int, c: int) -> bool:
    if _fast is not None and c < 64:
        return _fast.ideal_closed(s_mask, h_mask, c)
    return _py.ideal_closed(s_mask, h_mask, c)


def closed_submasks(pool: int, h_mask: int, c: int) -> list:
    if _fast is not None and c < 64:
        return _fast.closed_submasks(pool, h_mask, c)
    return _py.closed_submasks(pool, h_mask, c)


def normalize_window(raw: int, c: int) -> tuple:
    if _fast is not None and c < 63 and raw < _U64:
        return _fast.normalize_window(raw, c)
    return _py.normalize_window(raw, c)


def align_shift(mask: int, s: int, c: int) -> int:
    if _fast is not None and c < 63 and mask < _U64:
        return _fast.align_shift(mask, s, c)
    return _py.align_shift(mask, s, c)
