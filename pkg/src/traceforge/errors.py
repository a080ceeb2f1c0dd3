"""Exception hierarchy.

Mathematical input problems (bad generators, mixed semigroups, out-of-range
arguments) and precision problems (the truncated engine cannot certify an
answer) are kept on separate branches so the CLI can map them to distinct
exit codes.
"""


class TraceForgeError(Exception):
    """Base class for all library errors."""


class MathInputError(TraceForgeError):
    """The input is syntactically fine but mathematically inadmissible."""


class EmptyInput(MathInputError):
    pass


class GcdNotOne(MathInputError):
    """Generators with gcd > 1 would leave infinitely many gaps."""


class MixedSemigroups(MathInputError):
    """Binary ideal operation applied across different ambient semigroups."""


class NotIntegral(MathInputError):
    """Operation requires an integral ideal but got a fractional one."""


class NotMember(MathInputError):
    """An element was required to lie in a semigroup or ideal but does not."""


class BoundExceeded(MathInputError):
    """Census requested past the configured conductor bound."""


class NotInAlgebra(MathInputError):
    """A generator does not lie in the truncated subalgebra."""


class NotMinimalValuation(MathInputError):
    """Colon pivot must have the ideal's minimal valuation."""


class PrecisionError(TraceForgeError):
    """The truncated engine cannot certify an answer at this precision."""


class PrecisionTooLow(PrecisionError):
    pass


class SaturationCheckFailed(PrecisionError):
    """A runtime saturation check failed; rebuild with a larger precision."""
