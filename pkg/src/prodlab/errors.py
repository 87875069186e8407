"""Exception hierarchy shared across the package."""


class ModelError(Exception):
    """Base class for all model-level errors."""


class DomainError(ModelError):
    """Input level outside the admissible window of a production function."""


class AdmissibilityError(ModelError):
    """Production/cost pair violates the admissibility conditions."""


class UndefinedAraError(ModelError):
    """Risk aversion undefined: zero first derivative with nonzero curvature."""


class UnsupportedClassificationError(ModelError):
    """Operation requires a monotone risk-aversion class (not mixed)."""


class FlatRegionError(ModelError):
    """Inversion attempted on a flat segment of the production function."""


class DegenerateStatesError(ModelError):
    """Skill states too close: a gap denominator vanished."""


class ResolutionError(ModelError):
    """Sampled series too coarse for the requested detection."""


class ConfigError(ModelError):
    """Invalid experiment configuration; message carries the field path."""
