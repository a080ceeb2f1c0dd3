"""Canonical ideal and ring-classification flags for a numerical semigroup."""

from __future__ import annotations

from dataclasses import dataclass

from .ideals import SemigroupIdeal, from_membership, maximal_ideal, unit_ideal
from .semigroup import NumericalSemigroup


def canonical_ideal(semigroup: NumericalSemigroup) -> SemigroupIdeal:
    """K = {z : frobenius − z is not a member}, normalized to minimum 0.

    0 always belongs (the Frobenius number is a gap) and no negative integer
    does, so the normalization is automatic.  H ⊆ K, and K represents the
    canonical module.
    """
    frob = semigroup.frobenius
    c = semigroup.conductor
    sporadic = [z for z in range(c) if not semigroup.contains(frob - z)]
    return from_membership(semigroup, sporadic, c)


@dataclass(frozen=True)
class GorensteinFlavors:
    gorenstein: bool
    nearly_gorenstein: bool
    almost_gorenstein: bool
    minimal_multiplicity: bool
    arf: bool

    def to_json(self) -> dict:
        return {
            "gorenstein": self.gorenstein,
            "nearlyGorenstein": self.nearly_gorenstein,
            "almostGorenstein": self.almost_gorenstein,
            "minimalMultiplicity": self.minimal_multiplicity,
            "arf": self.arf,
        }


def gorenstein_flavors(semigroup: NumericalSemigroup) -> GorensteinFlavors:
    """Classification flags derived from the canonical ideal K.

    gorenstein: K is a translate of H.  nearly: trace(K) contains the maximal
    ideal.  almost: the colon of K into its principal reduction contains the
    maximal ideal.  minimal multiplicity: embedding dimension equals
    multiplicity.
    """
    kk = canonical_ideal(semigroup)
    mm = maximal_ideal(semigroup)
    ring = unit_ideal(semigroup)
    colon = ring.translate(kk.min_element).difference(kk)
    return GorensteinFlavors(
        gorenstein=kk.is_isomorphic(ring),
        nearly_gorenstein=mm.is_subset_of(kk.trace_ideal()),
        almost_gorenstein=mm.is_subset_of(colon),
        minimal_multiplicity=semigroup.multiplicity == len(semigroup.generators),
        arf=semigroup.is_arf(),
    )
