"""Exception types shared across the package.

Each operation documents which of these it can raise; the CLI maps them
onto the exit-code contract (usage 1, domain error 2, verification 3).
"""


class Split244Error(Exception):
    """Base class for all domain errors raised by this package."""


class ZeroPolynomial(Split244Error):
    """A resultant operand was the zero polynomial."""


class DegreeTooLow(Split244Error):
    """Discriminant requested for a polynomial of degree < 2."""


class SingularCurve(Split244Error):
    """The octavic (or sextic) model has a repeated root."""


class DegenerateUV(Split244Error):
    """(u, v) sits on the degeneracy divisor of the reconstruction map."""


class NotACurve(Split244Error):
    """Moduli point with vanishing discriminant on a non-degenerate stratum."""


class J2Vanishes(Split244Error):
    """Absolute invariants undefined: the degree-2 invariant is zero."""


class SingularQuartic(Split244Error):
    """Binary quartic with vanishing discriminant; j undefined."""


class SingularCubic(Split244Error):
    """Cubic model with vanishing discriminant; j undefined."""


class DenominatorZero(Split244Error):
    """A closed-form denominator vanished at the requested point."""


class PZero(Split244Error):
    """The P denominator of the Z2^3 (u, v) specialization vanished."""


class UnknownGroup(Split244Error):
    """Automorphism label has no row in the splitting-type table."""


class NonConvergence(Split244Error):
    """Root refinement failed to reach tolerance within the iteration cap."""


class DegenerateTransform(Split244Error):
    """Normal-form change of coordinates collided roots with 0 or infinity."""


class CalibrationFailure(Split244Error):
    """A build-time calibration contract failed; results would be untrustworthy."""
