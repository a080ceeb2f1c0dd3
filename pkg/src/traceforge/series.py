"""Truncated power series over the rationals.

A series is a tuple of Fractions of fixed length N (the working precision);
index = exponent of t.  All arithmetic is exact; precision loss only ever
means "coefficients past some degree are unknown", tracked by the callers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

Series = tuple  # tuple[Fraction, ...]

_ZERO = Fraction(0)


def make_series(coeffs: dict, precision: int) -> Series:
    s = [_ZERO] * precision
    for k, v in coeffs.items():
        if 0 <= k < precision:
            s[k] = Fraction(v)
        elif Fraction(v) != 0 and k < 0:
            raise ValueError(f"negative exponent {k}")
    return tuple(s)


def monomial(k: int, precision: int) -> Series:
    return make_series({k: 1}, precision)


def valuation(s: Series) -> Optional[int]:
    """Order of vanishing at t = 0; None for the zero series."""
    for i, c in enumerate(s):
        if c:
            return i
    return None


def degree(coeffs: dict) -> int:
    """Largest exponent with a nonzero coefficient; -1 for zero."""
    nz = [k for k, v in coeffs.items() if Fraction(v) != 0]
    return max(nz) if nz else -1


def add(a: Series, b: Series) -> Series:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Series, b: Series) -> Series:
    return tuple(x - y for x, y in zip(a, b))


def scale(c: Fraction, a: Series) -> Series:
    return tuple(c * x for x in a)


def mul(a: Series, b: Series) -> Series:
    n = len(a)
    out = [_ZERO] * n
    for i, ci in enumerate(a):
        if ci:
            for j in range(n - i):
                cj = b[j]
                if cj:
                    out[i + j] += ci * cj
    return tuple(out)


def divide(s: Series, x: Series) -> Series:
    """Exact series division s / x for v(s) ≥ v(x).

    The quotient is computed by eliminating coefficients one degree at a
    time (the finite form of expanding 1/(1 − at − ...) as a geometric
    series).  Coefficients of the quotient past N − v(x) depend on unknown
    coefficients of s and are returned as zero; callers must lower their
    guaranteed precision by v(x).
    """
    n = len(s)
    vx = valuation(x)
    if vx is None:
        raise ZeroDivisionError("division by the zero series")
    vs = valuation(s)
    if vs is None:
        return s
    if vs < vx:
        raise ValueError(f"series of valuation {vs} is not divisible by valuation {vx}")
    unit = list(x[vx:]) + [_ZERO] * vx
    rem = list(s[vx:]) + [_ZERO] * vx
    quot = [_ZERO] * n
    top = n - vx
    for i in range(top):
        q = rem[i] / unit[0]
        quot[i] = q
        if q:
            for j in range(top - i):
                if unit[j]:
                    rem[i + j] -= q * unit[j]
    return tuple(quot)


def truncate_to(s: Series, bound: int) -> Series:
    """Zero out all coefficients at or past `bound`."""
    return tuple(c if i < bound else _ZERO for i, c in enumerate(s))
