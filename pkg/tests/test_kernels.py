"""The compiled kernels must agree exactly with the pure-Python twins."""

import pytest
from hypothesis import given, strategies as st

from traceforge import _kernels_py as pure

compiled = pytest.importorskip("traceforge._kernels", reason="compiled backend not built")

widths = st.integers(min_value=1, max_value=24)


@st.composite
def mask_and_width(draw):
    width = draw(widths)
    mask = draw(st.integers(min_value=0, max_value=(1 << width) - 1))
    return mask, width


@given(mask_and_width(), mask_and_width())
def test_minkowski_matches(a, b):
    (ma, wa), (mb, _) = a, b
    assert pure.minkowski(ma, mb, wa) == compiled.minkowski(ma, mb, wa)


@given(mask_and_width())
def test_addition_closed_matches(mw):
    mask, width = mw
    assert pure.addition_closed(mask, width) == compiled.addition_closed(mask, width)


@given(st.integers(min_value=1, max_value=20), st.data())
def test_colon_window_matches(c, data):
    e = data.draw(st.integers(min_value=0, max_value=(1 << (c + 1)) - 1)) | (1 << c)
    f = data.draw(st.integers(min_value=0, max_value=(1 << (c + 1)) - 1)) | (1 << c) | 1
    assert pure.colon_window(e, f, c) == compiled.colon_window(e, f, c)


@given(st.integers(min_value=1, max_value=20), st.data())
def test_ideal_closed_and_submasks_match(c, data):
    h = data.draw(st.integers(min_value=0, max_value=(1 << (c + 1)) - 1)) | (1 << c) | 1
    s = data.draw(st.integers(min_value=0, max_value=(1 << c) - 1))
    assert pure.ideal_closed(s, h, c) == compiled.ideal_closed(s, h, c)
    pool = data.draw(st.integers(min_value=0, max_value=(1 << c) - 1))
    assert pure.closed_submasks(pool, h, c) == compiled.closed_submasks(pool, h, c)


@given(st.integers(min_value=0, max_value=20), st.data())
def test_normalize_and_align_match(c, data):
    raw = data.draw(st.integers(min_value=0, max_value=(1 << (c + 1)) - 1)) | (1 << c)
    assert pure.normalize_window(raw, c) == compiled.normalize_window(raw, c)
    s = data.draw(st.integers(min_value=0, max_value=c + 3))
    mask = raw
    assert pure.align_shift(mask, s, c) == compiled.align_shift(mask, s, c)


def test_minkowski_is_sumset():
    # {0,2} + {0,1} = {0,1,2,3}, truncated to 3 bits -> {0,1,2}
    assert pure.minkowski(0b101, 0b11, 3) == 0b111
    assert pure.minkowski(0b101, 0b11, 4) == 0b1111


def test_normalize_fills_tail():
    # raw = {start+1} with tail from start+4, at c=4: min moves up by 1 and
    # the vacated top position is tail-filled
    shift, mask = pure.normalize_window(0b10000 | 0b00010, 4)
    assert shift == 1
    assert mask == 0b11001
