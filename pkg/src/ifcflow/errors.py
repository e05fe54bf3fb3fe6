"""Exception taxonomy shared by all modules.

Each class corresponds to one failure mode of the pipeline; the CLI maps
them onto documented exit codes (see cli.EXIT_CODES).
"""


class IfcflowError(Exception):
    """Base class for all package errors."""


class ConfigError(IfcflowError):
    """Invalid or inconsistent configuration / input validation failure."""


class DomainError(IfcflowError):
    """Evaluation requested outside the model's time interval [a, 0)."""


class NotPositiveDefinite(IfcflowError):
    """Spatial metric lost positive definiteness at a sampled point."""


class OutsideCone(IfcflowError):
    """Curvature function evaluated at eigenvalues outside the positive cone."""


class NonSymmetric(IfcflowError):
    """Shape operator fails metric symmetry beyond tolerance."""


class NotSpacelike(IfcflowError):
    """Graph gradient too large: |Du|^2_sigma >= 1 - margin."""


class NotConvex(IfcflowError):
    """Smallest shifted principal curvature dropped below the strictness floor."""


class ComplexSpectrum(IfcflowError):
    """Eigenvalue solve produced an imaginary residual above tolerance."""


class StiffnessError(IfcflowError):
    """Time step rejected repeatedly; integration aborted."""


class ConvexityLost(IfcflowError):
    """Homogeneous slice operator left the positive cone during ODE integration."""


class NonPositiveSeries(IfcflowError):
    """Rate fit requested on a series with non-positive values."""


class InsufficientRange(IfcflowError):
    """Flow trace too short for the requested transition-derivative order."""
