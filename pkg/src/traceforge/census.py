"""Finite censuses: conductor-containing ideals, trace ideals, fibers.

Every regular monomial trace ideal contains the conductor ideal, so
enumerating the additively-closed subsets of H ∩ [0, conductor) and
filtering is a complete census of monomial trace ideals.
"""

from __future__ import annotations

import os

from . import kernels
from .errors import BoundExceeded, NotMember
from .ideals import SemigroupIdeal, from_generators, from_window
from .semigroup import NumericalSemigroup, from_generators as sg_from_generators

DEFAULT_CENSUS_BOUND = 30
CENSUS_BOUND_ENV = "TRACE_FORGE_CENSUS_BOUND"


def census_bound() -> int:
    raw = os.environ.get(CENSUS_BOUND_ENV)
    if raw is None:
        return DEFAULT_CENSUS_BOUND
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{CENSUS_BOUND_ENV} must be an integer, got {raw!r}") from None


def _check_bound(semigroup: NumericalSemigroup, bound: int | None) -> None:
    limit = census_bound() if bound is None else bound
    if semigroup.conductor > limit:
        raise BoundExceeded(
            f"conductor {semigroup.conductor} exceeds the census bound {limit}; "
            f"raise it via {CENSUS_BOUND_ENV} or the bound argument"
        )


def conductor_ideals(
    semigroup: NumericalSemigroup, bound: int | None = None
) -> list[SemigroupIdeal]:
    """All integral ideals squeezed between the conductor ideal and H."""
    _check_bound(semigroup, bound)
    c = semigroup.conductor
    pool = semigroup.mask & ((1 << c) - 1)
    return [
        from_window(semigroup, 0, sub | (1 << c))
        for sub in kernels.closed_submasks(pool, semigroup.mask, c)
    ]


def trace_ideals(
    semigroup: NumericalSemigroup, bound: int | None = None
) -> list[SemigroupIdeal]:
    return [e for e in conductor_ideals(semigroup, bound) if e.is_trace_ideal()]


def stable_trace_ideals(
    semigroup: NumericalSemigroup, bound: int | None = None
) -> list[SemigroupIdeal]:
    return [e for e in trace_ideals(semigroup, bound) if e.is_stable()]


def closed_ideal(semigroup: NumericalSemigroup, m: int) -> SemigroupIdeal:
    """The integrally closed ideal of all members ≥ m, for m in H."""
    if not semigroup.contains(m):
        raise NotMember(f"{m} is not in {semigroup!r}")
    return from_generators(semigroup, [m]).integral_closure()


def integrally_closed_ideals(
    semigroup: NumericalSemigroup, bound: int | None = None
) -> list[SemigroupIdeal]:
    """All integrally closed integral ideals containing the conductor ideal."""
    _check_bound(semigroup, bound)
    return [
        closed_ideal(semigroup, m)
        for m in range(semigroup.conductor + 1)
        if semigroup.contains(m)
    ]


def trace_fiber(
    semigroup: NumericalSemigroup, m: int, bound: int | None = None
) -> list[SemigroupIdeal]:
    """Monomial trace ideals whose integral closure is the closed ideal at m.

    A trace ideal with minimum m automatically has integral closure equal to
    the closed ideal at m.  Only the monomial part of the fiber is listed;
    non-monomial members are the truncated engine's business.  For m past
    the conductor the fiber is empty: every trace ideal contains the
    conductor ideal, so its minimum is at most the conductor.
    """
    if not semigroup.contains(m):
        raise NotMember(f"{m} is not in {semigroup!r}")
    if m > semigroup.conductor:
        return []
    return [e for e in trace_ideals(semigroup, bound) if e.min_element == m]


def enumerate_semigroups(max_conductor: int) -> list[NumericalSemigroup]:
    """All numerical semigroups with conductor ≤ max_conductor."""
    if max_conductor < 0:
        raise ValueError("max_conductor must be >= 0")
    if max_conductor == 0:
        return [sg_from_generators([1])]
    width = max_conductor  # membership candidates on [0, max_conductor)
    out = []
    for bits in range(1 << (width - 1)):
        mask = 1 | bits << 1
        if not kernels.addition_closed(mask, width):
            continue
        members = [z for z in range(1, width) if mask >> z & 1]
        first = members[0] if members else max_conductor
        gens = members + list(range(max_conductor, max_conductor + first + 1))
        out.append(sg_from_generators(gens))
    return out


def relative_ideal_classes(semigroup: NumericalSemigroup) -> list[SemigroupIdeal]:
    """Every relative ideal up to translation, normalized to minimum 0.

    A relative ideal with minimum 0 is determined by an H-closed subset of
    [0, conductor) containing 0, so the enumeration is exhaustive over
    isomorphism classes of regular monomial fractional ideals.
    """
    c = semigroup.conductor
    pool = (1 << c) - 1 if c else 0
    subs = kernels.closed_submasks(pool, semigroup.mask, c)
    return [
        from_window(semigroup, 0, sub | (1 << c)) for sub in subs if sub & 1 or c == 0
    ]
