"""Numerical semigroups: membership, gaps, conductor, Arf condition.

A numerical semigroup H is an additively closed subset of the naturals
containing 0 with finitely many gaps.  Membership is stored as a bitmask
over [0, conductor]; everything at or past the conductor belongs, so the
window determines H and all queries are O(1) after construction.
"""

from __future__ import annotations

import math
from typing import Iterable

from . import kernels
from .errors import EmptyInput, GcdNotOne


def _closure_mask(gens: tuple[int, ...], bound: int) -> int:
    """Bits of all sums of generators in [0, bound]."""
    full = (1 << (bound + 1)) - 1
    m = 1
    while True:
        prev = m
        for g in gens:
            m |= (m << g) & full
        if m == prev:
            return m


class NumericalSemigroup:
    """Immutable numerical semigroup; build via :func:`from_generators`."""

    __slots__ = ("generators", "frobenius", "conductor", "multiplicity", "mask")

    def __init__(self, generators: tuple[int, ...], frobenius: int, mask: int):
        self.generators = generators
        self.frobenius = frobenius
        self.conductor = frobenius + 1
        self.multiplicity = generators[0]
        self.mask = mask

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.frobenius == other.frobenius and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.frobenius, self.mask))

    def __repr__(self) -> str:
        return f"NumericalSemigroup({','.join(map(str, self.generators))})"

    def contains(self, z: int) -> bool:
        if z < 0:
            return False
        if z >= self.conductor:
            return True
        return bool(self.mask >> z & 1)

    __contains__ = contains

    def gaps(self) -> list[int]:
        return [z for z in range(self.conductor) if not self.mask >> z & 1]

    @property
    def genus(self) -> int:
        return self.conductor - (self.mask.bit_count() - 1)

    def small_elements(self) -> list[int]:
        """Members in [0, conductor]; with the conductor these determine H."""
        return [z for z in range(self.conductor + 1) if self.mask >> z & 1]

    def members_upto(self, top: int) -> list[int]:
        return [z for z in range(top + 1) if self.contains(z)]

    def is_arf(self) -> bool:
        """Arf condition: x ≥ y ≥ z in H implies x + y − z in H.

        Only triples with x below the conductor can fail, because y ≥ z
        forces x + y − z ≥ x; so the check is finite and exact.
        """
        small = [z for z in range(self.conductor) if self.mask >> z & 1]
        for ix, x in enumerate(small):
            for iy in range(ix + 1):
                y = small[iy]
                for iz in range(iy + 1):
                    if not self.contains(x + y - small[iz]):
                        return False
        return True

    def arf_closure(self) -> NumericalSemigroup:
        """Smallest Arf semigroup containing this one.

        Saturates the defining condition: any violating triple forces
        x + y − z into the set, and every forced element lies in each Arf
        oversemigroup, so the fixpoint is the closure.  New elements are
        always below the conductor, which keeps the loop finite.
        """
        c = self.conductor
        if c == 0:
            return self
        members = {z for z in range(c) if self.mask >> z & 1}
        changed = True
        while changed:
            changed = False
            small = sorted(members)
            for ix, x in enumerate(small):
                for iy in range(ix + 1):
                    y = small[iy]
                    for iz in range(iy + 1):
                        w = x + y - small[iz]
                        if w < c and w not in members:
                            members.add(w)
                            changed = True
        gens = [z for z in members if z] + list(range(c, c + self.multiplicity + 1))
        return from_generators(gens)


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Semigroup generated by `gens`, with minimal generators recomputed."""
    glist = sorted(set(gens))
    if not glist:
        raise EmptyInput("a numerical semigroup needs at least one generator")
    if glist[0] <= 0:
        raise ValueError(f"generators must be positive, got {glist[0]}")
    if math.gcd(*glist) != 1:
        raise GcdNotOne(f"gcd of {glist} is {math.gcd(*glist)}, so the gap set is infinite")

    gtuple = tuple(glist)
    mult = gtuple[0]
    bound = 2 * gtuple[-1] + 2
    while True:
        bits = _closure_mask(gtuple, bound)
        run = (1 << mult) - 1 << (bound - mult + 1)
        if bits & run == run:
            break
        bound *= 2

    nonmembers = ~bits & ((1 << (bound + 1)) - 1)
    frobenius = nonmembers.bit_length() - 1  # -1 when there are no gaps
    conductor = frobenius + 1
    mask = bits & ((1 << (conductor + 1)) - 1)

    # Minimal generators: nonzero members that are not sums of two nonzero
    # members.  All of them lie below conductor + multiplicity.
    top = conductor + mult
    ext = bits & ((1 << (top + 1)) - 1)
    ext |= ((1 << (top - conductor + 1)) - 1) << conductor
    nonzero = ext & ~1
    sums = kernels.minkowski(nonzero, nonzero, top + 1)
    minimal = tuple(
        z for z in range(1, top + 1) if nonzero >> z & 1 and not sums >> z & 1
    )
    return NumericalSemigroup(minimal, frobenius, mask)


def naturals() -> NumericalSemigroup:
    """H = ℕ, the value semigroup of a regular ring."""
    return from_generators([1])
