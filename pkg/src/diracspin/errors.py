"""Exception types shared across the package."""


class DiracSpinError(Exception):
    """Base class for all diracspin errors."""


class ConventionViolationError(DiracSpinError):
    """A value breaks a packing or reality convention, e.g. a non-antisymmetric
    array handed to the tensor packer, or an operator mean value with a
    non-negligible imaginary part."""


class InvalidVelocityError(DiracSpinError):
    """|beta| >= 1."""


class SingularVariantError(DiracSpinError):
    """Spin operator variant undefined at this momentum (Stech at b = 0)."""


class SubspaceLeakageError(DiracSpinError):
    """Operator does not preserve the positive-energy subspace."""


class DegenerateProjectorError(DiracSpinError):
    """First projector invariant I1 vanishes; no direction to project onto."""


class ZeroVelocityError(DiracSpinError):
    """Projection onto the direction of motion is undefined at beta = 0."""


class InvalidParameterError(DiracSpinError):
    """Unusable physical parameter (e.g. g = 0 in the effective field)."""


class DivergenceError(DiracSpinError):
    """Integration produced a non-finite state."""

    def __init__(self, step: int, message: str | None = None):
        self.step = step
        super().__init__(message or f"non-finite state at step {step}")
