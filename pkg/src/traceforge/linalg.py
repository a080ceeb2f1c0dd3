"""Echelon forms over the rationals, keyed by series valuation.

A subspace of the truncated series ring is stored as {valuation: row} with
monic rows, exactly one per attained valuation, fully reduced against each
other.  Full reduction makes the representation canonical: a row's support
avoids every other pivot, so equality of subspaces is equality of dicts.
"""

from __future__ import annotations

from fractions import Fraction

from . import series as ps


def reduce_row(s, rows: dict):
    """Eliminate leading coefficients of `s` while they hit existing pivots."""
    while True:
        v = ps.valuation(s)
        if v is None or v not in rows:
            return s
        s = ps.sub(s, ps.scale(s[v], rows[v]))


def insert_row(s, rows: dict) -> bool:
    """Insert a vector into an echelon dict; True if the span grew."""
    s = reduce_row(s, rows)
    v = ps.valuation(s)
    if v is None:
        return False
    # clear trailing coefficients sitting on existing pivots
    for w in sorted(rows):
        if w > v and s[w]:
            s = ps.sub(s, ps.scale(s[w], rows[w]))
    s = ps.scale(1 / s[v], s)
    rows[v] = s
    for w, u in list(rows.items()):
        if w != v and u[v]:
            rows[w] = ps.sub(u, ps.scale(u[v], s))
    return True


def full_reduce(s, rows: dict):
    """Canonical representative of s modulo the span: zero at every pivot.

    Because the echelon rows are fully reduced against each other, one pass
    suffices and the map is linear, so it is safe to build constraint
    matrices from these residuals.
    """
    s = reduce_row(s, rows)
    for w in sorted(rows):
        if s[w]:
            s = ps.sub(s, ps.scale(s[w], rows[w]))
    return s


def span_contains(s, rows: dict) -> bool:
    return ps.valuation(reduce_row(s, rows)) is None


def nullspace(matrix: list, ncols: int) -> list:
    """Basis of the right kernel of a rational matrix (rows of length ncols)."""
    m = [list(row) for row in matrix]
    pivots: dict[int, int] = {}
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots[c] = r
        r += 1
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for c, row in pivots.items():
            v[c] = -m[row][free]
        basis.append(v)
    return basis
