"""Dirac spin operators, invariant spin projections, and BMT precession."""

__version__ = "0.1.0"

from . import clifford, tensor_core, spin_operators, projectors
from .errors import (
    ConventionViolationError,
    DegenerateProjectorError,
    DiracSpinError,
    DivergenceError,
    InvalidParameterError,
    InvalidVelocityError,
    SingularVariantError,
    SubspaceLeakageError,
    ZeroVelocityError,
)
from .tensor_core import AntisymTensor, Beta3, FourVector
from .spin_operators import MomentumState, SpinAxis
from .projectors import FieldProjector, ProjectorFrame
