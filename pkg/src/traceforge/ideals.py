"""Relative ideals over a numerical semigroup, with exact window arithmetic.

A relative ideal E is a subset of the integers, bounded below, with
E + H ⊆ E.  It models a regular monomial fractional ideal of the semigroup
ring.  Since every z ≥ min(E) + conductor(H) belongs to E, a bitmask over
the window [min(E), min(E) + conductor] determines E exactly; every binary
operation below computes on such windows with no truncation error.

The cofinite tail is written "k->" in displays: {5,8,10,11,12->} means
{5, 8, 10, 11} together with every integer ≥ 12.
"""

from __future__ import annotations

from typing import Iterable, Optional

from . import kernels
from .errors import EmptyInput, MixedSemigroups, NotIntegral, NotMember
from .semigroup import NumericalSemigroup, from_generators as _sg_from_generators


class SemigroupIdeal:
    """Immutable relative ideal; build via the module constructors."""

    __slots__ = ("semigroup", "min_element", "window")

    def __init__(self, semigroup: NumericalSemigroup, min_element: int, window: int):
        self.semigroup = semigroup
        self.min_element = min_element
        self.window = window

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SemigroupIdeal):
            return NotImplemented
        return (
            self.semigroup == other.semigroup
            and self.min_element == other.min_element
            and self.window == other.window
        )

    def __hash__(self) -> int:
        return hash((self.min_element, self.window))

    def __repr__(self) -> str:
        from .textio import format_tail

        return f"SemigroupIdeal({format_tail(self)} over {self.semigroup!r})"

    # -- membership and shape ------------------------------------------------

    @property
    def conductor(self) -> int:
        return self.semigroup.conductor

    def contains(self, z: int) -> bool:
        i = z - self.min_element
        if i < 0:
            return False
        if i >= self.conductor:
            return True
        return bool(self.window >> i & 1)

    __contains__ = contains

    @property
    def tail_start(self) -> int:
        """Least k with [k, ∞) entirely inside the ideal."""
        zeros = ~self.window & ((1 << (self.conductor + 1)) - 1)
        return self.min_element + zeros.bit_length()

    def sporadic_elements(self) -> list[int]:
        """Members below the cofinite tail."""
        return [
            self.min_element + i
            for i in range(self.tail_start - self.min_element)
            if self.window >> i & 1
        ]

    def minimal_generators(self) -> list[int]:
        """Members not reachable as member + nonzero semigroup element."""
        c = self.conductor
        if c == 0:
            return [self.min_element]
        reachable = kernels.minkowski(self.window, self.semigroup.mask & ~1, c + 1)
        mg = self.window & ~reachable & ((1 << c) - 1)
        return [self.min_element + i for i in range(c) if mg >> i & 1]

    @property
    def is_integral(self) -> bool:
        """Contained in H (in particular min ≥ 0)."""
        if self.min_element < 0:
            return False
        c = self.conductor
        cover = kernels.align_shift(self.semigroup.mask, self.min_element, c)
        return not (self.window & ~cover)

    def is_subset_of(self, other: SemigroupIdeal) -> bool:
        self._same_ring(other)
        s = self.min_element - other.min_element
        if s < 0:
            return False
        cover = kernels.align_shift(other.window, s, self.conductor)
        return not (self.window & ~cover)

    def __le__(self, other: SemigroupIdeal) -> bool:
        return self.is_subset_of(other)

    def translate(self, k: int) -> SemigroupIdeal:
        return SemigroupIdeal(self.semigroup, self.min_element + k, self.window)

    def is_isomorphic(self, other: SemigroupIdeal) -> bool:
        """Fractional-ideal isomorphism is translation: equal window shapes."""
        self._same_ring(other)
        return self.window == other.window

    def _same_ring(self, other: SemigroupIdeal) -> None:
        if self.semigroup != other.semigroup:
            raise MixedSemigroups(
                f"{self.semigroup!r} and {other.semigroup!r} are different semigroups"
            )

    # -- arithmetic ----------------------------------------------------------

    def product(self, other: SemigroupIdeal) -> SemigroupIdeal:
        """Ideal product: the sumset E + F."""
        self._same_ring(other)
        c = self.conductor
        raw = kernels.minkowski(self.window, other.window, c + 1) | (1 << c)
        return SemigroupIdeal(
            self.semigroup, self.min_element + other.min_element, raw
        )

    def difference(self, other: SemigroupIdeal) -> SemigroupIdeal:
        """Ideal colon (E : F) = {z : z + F ⊆ E}, exact on its window."""
        self._same_ring(other)
        c = self.conductor
        raw = kernels.colon_window(self.window, other.window, c)
        shift, mask = kernels.normalize_window(raw, c)
        return SemigroupIdeal(
            self.semigroup, self.min_element - other.min_element + shift, mask
        )

    def intersect(self, other: SemigroupIdeal) -> SemigroupIdeal:
        self._same_ring(other)
        c = self.conductor
        lo = max(self.min_element, other.min_element)
        a = kernels.align_shift(self.window, lo - self.min_element, c)
        b = kernels.align_shift(other.window, lo - other.min_element, c)
        shift, mask = kernels.normalize_window(a & b, c)
        return SemigroupIdeal(self.semigroup, lo + shift, mask)

    def power(self, n: int) -> SemigroupIdeal:
        if n < 1:
            raise ValueError("power must be >= 1")
        acc = self
        for _ in range(n - 1):
            acc = acc.product(self)
        return acc

    def dual(self) -> SemigroupIdeal:
        """H − E, the module of homomorphisms into the ring."""
        return unit_ideal(self.semigroup).difference(self)

    def endomorphism_ideal(self) -> SemigroupIdeal:
        """E − E; contains 0 and is closed under addition."""
        return self.difference(self)

    # -- the trace/stability calculus ----------------------------------------

    def trace_ideal(self) -> SemigroupIdeal:
        """E + (H − E); always integral, idempotent, translation-invariant."""
        return self.product(self.dual())

    def is_trace_ideal(self) -> bool:
        return self.is_integral and self.trace_ideal() == self

    def is_stable(self) -> bool:
        """E + E = min(E) + E; the only monomial reduction is t^min."""
        return self.product(self).window == self.window

    def integral_closure(self) -> SemigroupIdeal:
        """All semigroup members ≥ min(E); the one-branch valuation criterion."""
        if not self.is_integral:
            raise NotIntegral(f"{self!r} is fractional; close an integral ideal")
        c = self.conductor
        mask = kernels.align_shift(self.semigroup.mask, self.min_element, c)
        return SemigroupIdeal(self.semigroup, self.min_element, mask)

    def is_integrally_closed(self) -> bool:
        return self.integral_closure() == self

    def blowup_ring(self) -> SemigroupIdeal:
        """Union of the min-normalized powers; stabilizes within conductor steps."""
        c = self.conductor
        prev = self.window
        while True:
            nxt = kernels.minkowski(prev, self.window, c + 1) | (1 << c)
            if nxt == prev:
                return SemigroupIdeal(self.semigroup, 0, prev)
            prev = nxt

    def blowup_conductor(self) -> SemigroupIdeal:
        """Conductor of the blow-up ring into H; always an integral trace ideal."""
        return unit_ideal(self.semigroup).difference(self.blowup_ring())

    def is_reflexive(self) -> bool:
        return self.dual().dual() == self

    def is_self_dual(self) -> bool:
        return self.is_isomorphic(self.dual())

    def reduction_witness(self, x: int) -> Optional[int]:
        """Smallest n ≤ conductor with x + nE = (n+1)E, or None.

        For monomial ideals only x = min(E) can succeed, but the search is
        performed rather than assumed.
        """
        if x not in self:
            raise NotMember(f"{x} is not an element of {self!r}")
        bound = max(self.conductor, 1)
        pw = self
        for n in range(1, bound + 1):
            nxt = pw.product(self)
            if x + pw.min_element == nxt.min_element and pw.window == nxt.window:
                return n
            pw = nxt
        return None

    def is_reduction(self, x: int) -> bool:
        return self.reduction_witness(x) is not None

    def as_numerical_semigroup(self) -> NumericalSemigroup:
        """Reinterpret a min-0, addition-closed ideal (e.g. a blow-up) as a semigroup."""
        if self.min_element != 0:
            raise ValueError("only ideals with minimum 0 can be semigroups")
        c = self.conductor
        if not kernels.addition_closed(self.window & ((1 << c) - 1), c):
            raise ValueError("ideal is not closed under addition")
        tail = self.tail_start
        if tail == 0:
            return _sg_from_generators([1])
        members = [z for z in self.sporadic_elements() if z > 0]
        first = members[0] if members else tail
        return _sg_from_generators(members + list(range(tail, tail + first + 1)))


# -- constructors --------------------------------------------------------------


def unit_ideal(semigroup: NumericalSemigroup) -> SemigroupIdeal:
    """H itself as a relative ideal."""
    return SemigroupIdeal(semigroup, 0, semigroup.mask)


def maximal_ideal(semigroup: NumericalSemigroup) -> SemigroupIdeal:
    """H ∖ {0}."""
    if semigroup.conductor == 0:
        return from_generators(semigroup, [1])
    return from_generators(semigroup, [g for g in semigroup.generators])


def conductor_ideal(semigroup: NumericalSemigroup) -> SemigroupIdeal:
    """Every integer ≥ conductor; the conductor of the integral closure."""
    c = semigroup.conductor
    return SemigroupIdeal(semigroup, c, (1 << (c + 1)) - 1)


def from_generators(semigroup: NumericalSemigroup, gens: Iterable[int]) -> SemigroupIdeal:
    """The relative ideal ∪ (g + H) over the given generators."""
    glist = sorted(set(gens))
    if not glist:
        raise EmptyInput("an ideal needs at least one generator")
    c = semigroup.conductor
    lo = glist[0]
    full = (1 << (c + 1)) - 1
    raw = 0
    for g in glist:
        d = g - lo
        if d <= c:
            raw |= (semigroup.mask << d) & full
    return SemigroupIdeal(semigroup, lo, raw | (1 << c))


def from_membership(
    semigroup: NumericalSemigroup, sporadic: Iterable[int], tail_start: int
) -> SemigroupIdeal:
    """Build from explicit membership and validate it is an H-ideal.

    `sporadic` lists the members below `tail_start`; everything from
    `tail_start` on is a member.
    """
    members = sorted(set(sporadic))
    if any(z >= tail_start for z in members):
        raise ValueError("sporadic members must lie below the tail")
    lo = members[0] if members else tail_start
    c = semigroup.conductor
    if tail_start - lo > c:
        raise ValueError(
            f"tail starts {tail_start - lo} past the minimum; an ideal over this "
            f"semigroup fills in from offset {c}"
        )
    raw = 1 << c
    for z in members:
        raw |= 1 << (z - lo)
    for i in range(max(tail_start - lo, 0), c):
        raw |= 1 << i
    if not kernels.ideal_closed(raw, semigroup.mask, c):
        raise ValueError("the given membership is not closed under adding semigroup elements")
    return SemigroupIdeal(semigroup, lo, raw)


def from_window(semigroup: NumericalSemigroup, start: int, raw: int) -> SemigroupIdeal:
    """Internal-style constructor from a raw window; normalizes the minimum."""
    c = semigroup.conductor
    raw |= 1 << c
    shift, mask = kernels.normalize_window(raw, c)
    return SemigroupIdeal(semigroup, start + shift, mask)


def reduction_witness_pair(sub: SemigroupIdeal, sup: SemigroupIdeal) -> Optional[int]:
    """Smallest n with sub · supⁿ = supⁿ⁺¹, for sub ⊆ sup; None if no witness."""
    sub._same_ring(sup)
    if not sub.is_subset_of(sup):
        raise NotMember(f"{sub!r} is not contained in {sup!r}")
    bound = max(sup.conductor, 1)
    pw = sup
    for n in range(1, bound + 1):
        nxt = pw.product(sup)
        lhs = sub.product(pw)
        if lhs == nxt:
            return n
        pw = nxt
    return None
