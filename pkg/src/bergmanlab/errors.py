"""Exception hierarchy for bergmanlab."""


class BergmanLabError(Exception):
    """Base class for all package errors."""


class EmptyDomain(BergmanLabError):
    """Domain specification has no interior (y_max <= 0 or x_max <= 0)."""


class NonMonotoneProfile(BergmanLabError):
    """Slice-radius profile increases somewhere; not a complete Reinhardt shadow."""


class NonConvexShadow(BergmanLabError):
    """Slice-radius profile fails the concavity certification."""


class OutOfRange(BergmanLabError):
    """Evaluation point outside the admissible interval."""


class NoBoundaryDisk(BergmanLabError):
    """Experiment requires a boundary disk the domain does not have."""


class PoleProximity(BergmanLabError):
    """Kernel evaluation too close to the singular set."""


class NotHolomorphic(BergmanLabError):
    """Input required to be a holomorphic polynomial has antiholomorphic terms."""


class NotHarmonic(BergmanLabError):
    """Symbol has a mixed term z^a zbar^b with a > 0 and b > 0."""


class NotHarmonicOnDisk(BergmanLabError):
    """Symbol restricted to a boundary disk is not harmonic."""


class NotHermitian(BergmanLabError):
    """Matrix expected to be Hermitian is not, beyond tolerance."""


class TailBoundUnavailable(BergmanLabError):
    """Power series carries no usable majorant on a disk containing the target."""


class TaylorTailTooLarge(BergmanLabError):
    """Truncated expansion misses too much mass of the test function."""


class QuadratureNonConvergence(BergmanLabError):
    """Adaptive quadrature failed to stabilize within the refinement budget."""


class ConfigInvalid(BergmanLabError):
    """Experiment configuration failed schema validation."""
