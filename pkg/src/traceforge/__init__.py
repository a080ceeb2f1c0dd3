"""Exact trace-ideal and stability calculus over numerical semigroup rings.

Two engines cover the same theory from opposite ends: the window calculus
(`semigroup`, `ideals`, `census`) does exact combinatorics on monomial
ideals, and the truncated engine (`oracle`) does exact rational linear
algebra on possibly non-monomial ideals of a one-branch subring of the
series line.  `verification` replays the worked examples and theorem suites
and reports the outcome.
"""

from .census import (
    conductor_ideals,
    enumerate_semigroups,
    integrally_closed_ideals,
    stable_trace_ideals,
    trace_fiber,
    trace_ideals,
)
from .classify import GorensteinFlavors, canonical_ideal, gorenstein_flavors
from .ideals import (
    SemigroupIdeal,
    conductor_ideal,
    from_generators as ideal_from_generators,
    from_membership as ideal_from_membership,
    maximal_ideal,
    unit_ideal,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .oracle import SubspaceIdeal, TruncatedSubalgebra
from .semigroup import NumericalSemigroup, from_generators, naturals

__version__ = "0.1.0"

__all__ = [
    "GorensteinFlavors",
    "KERNEL_BACKEND",
    "NumericalSemigroup",
    "SemigroupIdeal",
    "SubspaceIdeal",
    "TruncatedSubalgebra",
    "canonical_ideal",
    "conductor_ideal",
    "conductor_ideals",
    "enumerate_semigroups",
    "from_generators",
    "gorenstein_flavors",
    "ideal_from_generators",
    "ideal_from_membership",
    "integrally_closed_ideals",
    "maximal_ideal",
    "naturals",
    "stable_trace_ideals",
    "trace_fiber",
    "trace_ideals",
    "unit_ideal",
    "__version__",
]
