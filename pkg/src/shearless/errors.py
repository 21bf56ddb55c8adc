"""Exception hierarchy.

Two CLI-relevant families: ``ConfigError`` (bad input, exit code 1) and
``NumericsError`` (violated numerical contract, exit code 2).  Everything
else is a usage error and doubles as ``ValueError`` so generic callers can
catch it the obvious way.
"""


class ShearlessError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(ShearlessError):
    """Invalid configuration or parameters (CLI exit code 1)."""


class ConfigSyntaxError(ConfigError):
    """Config text that cannot be parsed; message names the line."""


class UnknownKey(ConfigError):
    """Config key or section not in the schema; message names it."""


class InvalidValue(ConfigError, ValueError):
    """Well-formed key with an unusable value; message names the key."""


class NonPositiveOmega(InvalidValue):
    """Drive frequency must be > 0."""


class BadSiteCount(InvalidValue):
    """Site count must be an even integer >= 4."""


class ZeroSubsteps(InvalidValue):
    """Substeps per period must be >= 1."""


class NumericsError(ShearlessError):
    """A numerical contract was violated (CLI exit code 2)."""


class NotUnitary(NumericsError):
    """Operator failed the unitarity residual check."""


class NoConvergence(NumericsError):
    """Eigenvalue decomposition failed to converge."""


class ContractViolation(NumericsError):
    """Generic runtime contract violation (norm drift, etc.)."""


class KickedDriveNotSampleable(ShearlessError, ValueError):
    """The kicked drive is a distribution; it has no pointwise values."""


class NonPositiveStep(ShearlessError, ValueError):
    """Integrator step size must be > 0."""


class BadTimeOrder(ShearlessError, ValueError):
    """Propagation interval must satisfy t1 > t0."""


class NotFound(ShearlessError):
    """A scan located no interior extremum."""


class NonPositiveSigma(ShearlessError, ValueError):
    """Smoothing width must be > 0."""


class NoPeaks(ShearlessError):
    """Peak detection found nothing above the prominence threshold."""


class SameSite(ShearlessError, ValueError):
    """Two-site quantities need two distinct sites."""


class IndexOutOfRange(ShearlessError, ValueError):
    """Site index outside 1..N."""


class NotADensityMatrix(ShearlessError, ValueError):
    """Input is not Hermitian, unit-trace and positive semidefinite."""


class UnknownFigureKind(ShearlessError, ValueError):
    """Requested plot kind is not one of the supported kinds."""
