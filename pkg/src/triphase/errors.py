"""Exception types raised by the numeric layers.

Everything derives from ValueError so callers that only want a coarse
"bad input" signal can catch that.
"""


class TriphaseError(ValueError):
    """Base class for domain errors."""


class NotHermitianError(TriphaseError):
    """Input matrix is not Hermitian within tolerance."""


class NotSkewHermitianError(TriphaseError):
    """Input matrix is not of the form i*H with H Hermitian."""


class NotSpecialUnitaryError(TriphaseError):
    """Input matrix is not special unitary within tolerance."""


class NotUnitNormError(TriphaseError):
    """Coefficient vector does not have unit Euclidean norm."""


class UnsupportedGeneratorError(TriphaseError):
    """No closed-form exponential for the requested generator index."""


class UnsupportedPlaneError(TriphaseError):
    """Coordinate plane outside the (alpha, beta, gamma, theta) set."""


class PathNotClosedError(TriphaseError):
    """Operation requires a closed loop."""


class PathTooShortError(TriphaseError):
    """Too few keyframes or samples to integrate."""


class StepOutOfRangeError(TriphaseError):
    """Finite-difference stencil leaves the parameter interval."""


class DegenerateSplitError(TriphaseError):
    """Level splitting requested with equal energies."""


class MixedLevelsError(TriphaseError):
    """Level set spans distinct eigenvalues where one is required."""


class StepCountTooLowError(TriphaseError):
    """Integrator step count too low for the requested accuracy."""
