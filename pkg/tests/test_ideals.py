"""Window arithmetic of relative ideals against frozen values and the
set-based reference."""

import pytest
from hypothesis import given, settings, strategies as st

from traceforge import (
    conductor_ideal,
    from_generators,
    ideal_from_generators as ideal,
    ideal_from_membership,
    maximal_ideal,
    unit_ideal,
)
from traceforge.errors import EmptyInput, MixedSemigroups, NotIntegral, NotMember
from traceforge.ideals import reduction_witness_pair

from reference import RefIdeal, ref_colon, ref_intersect, ref_sum, sg_to_ref, to_ref

H35 = from_generators([3, 5])
H456 = from_generators([4, 5, 6])
H345 = from_generators([3, 4, 5])


def members(e, a, b):
    return [z for z in range(a, b) if e.contains(z)]


def test_construction_fixtures():
    j = ideal(H35, [5, 12])
    assert members(j, 0, 16) == [5, 8, 10, 11, 12, 13, 14, 15]
    assert j.minimal_generators() == [5, 12]
    assert ideal(H35, [0]) == unit_ideal(H35)
    e = ideal(H456, [4, 6])
    assert members(e, 0, 13) == [4, 6, 8, 9, 10, 11, 12]
    assert e.minimal_generators() == [4, 6]
    with pytest.raises(EmptyInput):
        ideal(H35, [])


def test_product_fixtures():
    m = maximal_ideal(H35)
    mm = m.product(m)
    assert members(mm, 0, 13) == [6, 8, 9, 10, 11, 12]
    assert ideal(H35, [5, 12]).product(unit_ideal(H35)) == ideal(H35, [5, 12])
    e = ideal(H456, [4, 6])
    assert members(e.product(e), 0, 16) == [8, 10, 12, 13, 14, 15]


def test_difference_fixtures():
    j = ideal(H35, [5, 12])
    d = unit_ideal(H35).difference(j)
    assert members(d, -4, 6) == [-2, 0, 1, 3, 4, 5]
    assert d.minimal_generators() == [-2, 0]
    e = ideal(H456, [4, 6])
    endo = e.endomorphism_ideal()
    assert members(endo, 0, 10) == [0, 2, 4, 5, 6, 7, 8, 9]
    assert endo == e.translate(-4).difference(e.translate(-4))
    assert unit_ideal(H35).difference(unit_ideal(H35)) == unit_ideal(H35)
    with pytest.raises(MixedSemigroups):
        ideal(H35, [3]).difference(ideal(H456, [4]))


def test_trace_fixtures():
    j = ideal(H35, [5, 12])
    assert j.trace_ideal() == maximal_ideal(H35)
    assert unit_ideal(H35).trace_ideal() == unit_ideal(H35)
    e = ideal_from_membership(H456, [5, 6], 8)
    assert e == ideal(H456, [5, 6, 8])
    assert e.trace_ideal() == e
    assert e.is_trace_ideal()
    assert maximal_ideal(H35).is_trace_ideal()
    # <4,11> over <4,5,6>: {4} then everything from 8 on; its trace is the
    # maximal ideal, so it is not a trace ideal itself
    e2 = ideal_from_membership(H456, [4], 8)
    assert members(e2.dual(), 0, 8) == [0, 1, 2, 4, 5, 6, 7]
    assert e2.trace_ideal() == maximal_ideal(H456)
    assert not e2.is_trace_ideal()
    assert conductor_ideal(H456).is_trace_ideal()


def test_translation_invariance_of_trace():
    j = ideal(H35, [5, 12])
    assert j.translate(-9).trace_ideal() == j.trace_ideal()


def test_stability_fixtures():
    assert not maximal_ideal(H35).is_stable()
    assert ideal(H456, [4, 6]).is_stable()
    assert not ideal(H456, [5, 6, 8]).is_stable()
    assert unit_ideal(H35).is_stable()


def test_integral_closure_fixtures():
    e = ideal(H456, [4, 6])
    assert e.integral_closure() == maximal_ideal(H456)
    assert maximal_ideal(H35).integral_closure() == maximal_ideal(H35)
    j = ideal(H35, [5, 12])
    assert members(j.integral_closure(), 0, 10) == [5, 6, 8, 9]
    assert not j.is_integrally_closed()
    with pytest.raises(NotIntegral):
        j.translate(-6).integral_closure()


def test_blowup_fixtures():
    m = maximal_ideal(H35)
    blow = m.blowup_ring()
    assert members(blow, 0, 8) == [0, 2, 3, 4, 5, 6, 7]
    assert blow.as_numerical_semigroup() == from_generators([2, 3])
    assert members(m.blowup_conductor(), 0, 11) == [6, 8, 9, 10]
    m456 = maximal_ideal(H456)
    assert m456.blowup_ring().as_numerical_semigroup() == from_generators([1])
    assert m456.blowup_conductor() == conductor_ideal(H456)
    stable = ideal(H456, [4, 6])
    assert stable.blowup_ring() == stable.endomorphism_ideal()
    assert stable.blowup_conductor() == stable


def test_reflexivity_fixtures():
    m = maximal_ideal(H35)
    assert m.is_reflexive()
    assert unit_ideal(H35).is_reflexive()
    assert unit_ideal(H35).is_self_dual()
    assert ideal(H456, [4, 6]).is_self_dual()


def test_reduction_fixtures():
    m456 = maximal_ideal(H456)
    assert m456.reduction_witness(4) == 2
    assert m456.reduction_witness(5) is None
    stable = ideal(H456, [4, 6])
    assert stable.reduction_witness(4) == 1
    with pytest.raises(NotMember):
        m456.reduction_witness(7)
    assert reduction_witness_pair(ideal(H456, [4]), m456) is not None
    with pytest.raises(NotMember):
        reduction_witness_pair(ideal(H456, [5]), ideal(H456, [4, 6]))


def test_intersection_fixtures():
    e = ideal(H456, [4, 6])
    f = ideal(H456, [5, 6, 8])
    assert members(e.intersect(f), 0, 12) == [6, 8, 9, 10, 11]
    assert e.intersect(unit_ideal(H456)) == e
    assert maximal_ideal(H456).intersect(conductor_ideal(H456)) == conductor_ideal(H456)


def test_membership_constructor_validates():
    assert ideal_from_membership(H456, [4, 5, 6], 8) == maximal_ideal(H456)
    with pytest.raises(ValueError):
        ideal_from_membership(H456, [1], 8)  # 1+4=5 is missing
    with pytest.raises(ValueError):
        ideal_from_membership(H35, [0], 5)  # 0+3=3 is missing
    with pytest.raises(ValueError):
        ideal_from_membership(H35, [0], 20)  # tail further out than an ideal allows


# -- randomized cross-checks against the set-based reference -------------------

semigroups = st.sampled_from([H35, H456, H345, from_generators([2, 7]), from_generators([5, 7, 9])])


@st.composite
def sg_and_ideals(draw):
    h = draw(semigroups)
    gens1 = draw(st.lists(st.integers(min_value=-8, max_value=14), min_size=1, max_size=4))
    gens2 = draw(st.lists(st.integers(min_value=-8, max_value=14), min_size=1, max_size=4))
    return h, ideal(h, gens1), ideal(h, gens2)


@given(sg_and_ideals())
@settings(max_examples=120, deadline=None)
def test_binary_ops_match_reference(data):
    h, e, f = data
    ref_h = sg_to_ref(h)
    re, rf = to_ref(e), to_ref(f)
    assert to_ref(e.product(f)) == ref_sum(re, rf)
    assert to_ref(e.difference(f)) == ref_colon(re, rf)
    assert to_ref(e.intersect(f)) == ref_intersect(re, rf)
    assert to_ref(e.dual()) == ref_colon(ref_h, re)


@given(sg_and_ideals())
@settings(max_examples=80, deadline=None)
def test_colon_is_exact(data):
    """(E−F)+F ⊆ E, and anything not in E−F has a witness in F."""
    h, e, f = data
    d = e.difference(f)
    assert d.product(f).is_subset_of(e)
    lo = d.min_element
    for z in range(lo - 4, lo + h.conductor + 2):
        if not d.contains(z):
            witness = any(
                f.contains(w) and not e.contains(z + w)
                for w in range(f.min_element, f.min_element + h.conductor + 1)
            )
            assert witness, f"{z} excluded from the colon without a witness"
