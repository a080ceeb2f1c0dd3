"""Exact truncated-series arithmetic and the rational echelon kernel."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from traceforge import linalg, series as ps

N = 24


def s(coeffs):
    return ps.make_series(coeffs, N)


def test_valuation_and_mul():
    assert ps.valuation(s({})) is None
    assert ps.valuation(s({3: 1, 7: 2})) == 3
    prod = ps.mul(s({2: 1, 3: -1}), s({1: 2}))
    assert prod == s({3: 2, 4: -2})


def test_mul_truncates():
    prod = ps.mul(s({20: 1}), s({10: 1}))
    assert ps.valuation(prod) is None


def test_divide_exact():
    x = s({4: 1, 5: -1})
    p = ps.mul(x, s({8: 3, 9: Fraction(1, 2)}))
    q = ps.divide(p, x)
    assert q[8] == 3 and q[9] == Fraction(1, 2)
    assert ps.valuation(ps.sub(q, s({8: 3, 9: Fraction(1, 2)}))) is None


def test_divide_geometric_expansion():
    # t^12 / (t^4 - t^5) = t^8·(1 + t + t² + ...)
    q = ps.divide(s({12: 1}), s({4: 1, 5: -1}))
    for k in range(8, N - 4):
        assert q[k] == 1
    assert q[7] == 0


def test_divide_rejects_lower_valuation():
    with pytest.raises(ValueError):
        ps.divide(s({2: 1}), s({3: 1}))
    with pytest.raises(ZeroDivisionError):
        ps.divide(s({2: 1}), s({}))


coeff = st.integers(min_value=-4, max_value=4).map(Fraction)
series_st = st.dictionaries(st.integers(min_value=0, max_value=10), coeff, max_size=5).map(s)


@given(series_st, series_st)
@settings(max_examples=60, deadline=None)
def test_divide_inverts_mul(a, x):
    if ps.valuation(x) is None or ps.valuation(a) is None:
        return
    p = ps.mul(x, a)
    q = ps.divide(p, x)
    # correct below N - v(x)
    bound = N - ps.valuation(x)
    assert ps.truncate_to(q, bound) == ps.truncate_to(a, bound)


def test_echelon_canonical():
    rows = {}
    assert linalg.insert_row(s({2: 1, 5: 1}), rows)
    assert linalg.insert_row(s({3: 2, 5: 2}), rows)
    assert not linalg.insert_row(s({2: 3, 3: 6, 5: 9}), rows)
    assert sorted(rows) == [2, 3]
    assert rows[2][2] == 1 and rows[3][3] == 1
    # cancellation creates a new pivot
    assert linalg.insert_row(s({2: 1, 5: 2}), rows)
    assert sorted(rows) == [2, 3, 5]
    # rows are fully reduced: no row has support at another pivot
    for v, row in rows.items():
        for w in rows:
            if w != v:
                assert row[w] == 0


def test_full_reduce_is_canonical():
    rows = {}
    linalg.insert_row(s({1: 1, 4: 1}), rows)
    linalg.insert_row(s({2: 1}), rows)
    res = linalg.full_reduce(s({1: 2, 2: 5, 3: 7, 4: 2}), rows)
    assert res[1] == 0 and res[2] == 0
    assert res[3] == 7 and res[4] == 0


def test_nullspace():
    m = [[Fraction(1), Fraction(2), Fraction(0)], [Fraction(0), Fraction(0), Fraction(1)]]
    basis = linalg.nullspace(m, 3)
    assert len(basis) == 1
    v = basis[0]
    assert v[0] + 2 * v[1] == 0 and v[2] == 0
    assert linalg.nullspace([], 2) == [
        [Fraction(1), Fraction(0)],
        [Fraction(0), Fraction(1)],
    ]
