"""Exception types shared across the package."""


class LatticeError(ValueError):
    """Base class for all domain errors raised by this package."""


class InvalidTwistError(LatticeError):
    """Twisting a lattice form by 0 is not a lattice operation."""


class DegenerateLatticeError(LatticeError):
    """Operation requires a nondegenerate Gram matrix."""


class UnsupportedRankError(LatticeError):
    """Rank outside the range the operation supports."""


class InvalidElementError(LatticeError):
    """A rational lift does not lie in the dual lattice it claims to."""


class GlueObstructionError(LatticeError):
    """Glue subgroup is not isotropic, so no even overlattice exists."""


class SquareInputError(LatticeError):
    """Continued-fraction expansion of a perfect square was requested."""


class UnsupportedFormError(LatticeError):
    """Binary-form operation restricted to positive definite forms."""


class ImprimitiveFormError(LatticeError):
    """Binary form must have coprime coefficients."""


class HypothesisError(LatticeError):
    """Input violates the hypothesis under which the operation is defined."""


class DomainError(LatticeError):
    """Numeric argument outside the operation's domain."""
