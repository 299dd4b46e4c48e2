"""Spin projector machinery and the invariant relation chains.

An externally chosen antisymmetric tensor (-e, h) defines the projection
direction.  Its space-like part (orthogonal to the four-velocity) is
normalized by the first invariant I1 to the unit tensor S^{mu nu} =
([beta x eta], eta - beta(beta.eta)), with eta = gamma^2 h / sqrt(I1); the
dual four-vector is s^alpha = ((beta.eta), eta)/gamma and the rest-frame
direction nu = [eta - gamma beta (beta.eta)/(gamma+1)]/gamma.

The closed forms are implemented for e = 0 exactly as displayed; a
projector with e != 0 is supported only through spacelike_part and the
tensor contraction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import tensor_core as tc
from . import spin_operators as so
from .errors import (
    ConventionViolationError,
    DegenerateProjectorError,
    ZeroVelocityError,
)
from .tensor_core import AntisymTensor, Beta3, FourVector

_I1_FLOOR = 1e-14


@dataclass(frozen=True)
class FieldProjector:
    """Projector tensor h^{mu nu} = (-e, h) given by its two 3-vectors."""

    e: np.ndarray
    h: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "e", np.asarray(self.e, dtype=float).copy())
        object.__setattr__(self, "h", np.asarray(self.h, dtype=float).copy())
        if self.e.shape != (3,) or self.h.shape != (3,):
            raise ValueError("e and h must be 3-vectors")

    @property
    def tensor(self) -> AntisymTensor:
        return AntisymTensor(self.e, self.h)


@dataclass(frozen=True)
class ProjectorFrame:
    """Unit space-like projector tensor with its derived vectors."""

    S: AntisymTensor
    eta: np.ndarray
    s: FourVector
    nu: np.ndarray
    I1: float

    @property
    def Q(self) -> np.ndarray:
        """First display slot of S^{mu nu} = (Q, S), i.e. [beta x eta]."""
        return -self.S.e

    @property
    def S_vec(self) -> np.ndarray:
        """Vector part of S^{mu nu}: eta - beta (beta.eta)."""
        return self.S.h


def spacelike_part(p: FieldProjector, beta) -> AntisymTensor:
    """Component of the tensor orthogonal to the four-velocity.

    Returns (-e', h') with e' = -gamma^2 [beta x (h - [beta x e])] and
    h' = h - gamma^2 [beta x (e + [beta x h])]; the result satisfies
    T^{mu nu} b_nu = 0.
    """
    bb = beta if isinstance(beta, Beta3) else Beta3.from_velocity(beta)
    g2 = bb.gamma * bb.gamma
    b = bb.beta
    e_part = -g2 * np.cross(b, p.h - np.cross(b, p.e))
    h_part = p.h - g2 * np.cross(b, p.e + np.cross(b, p.h))
    return AntisymTensor(e_part, h_part)


def invariant_I1(p: FieldProjector, beta) -> float:
    """I1 = (1/2) T'_{mu nu} T'^{mu nu} of the space-like part.

    For e = 0 this equals gamma^2 [h^2 - (beta.h)^2].  Raises
    DegenerateProjectorError when I1 is not positive (h = 0, or an
    e-dominated projector with no normalizable space-like part).
    """
    sp = spacelike_part(p, beta)
    i1 = tc.contract(sp, sp)
    if i1 <= _I1_FLOOR:
        raise DegenerateProjectorError(f"I1 = {i1:.3e} is not positive")
    return i1


def projector_frame(p: FieldProjector, m: so.MomentumState) -> ProjectorFrame:
    """Build (S, eta, s, nu) from a magnetic-type projector (e = 0)."""
    if np.any(p.e != 0.0):
        raise ValueError("projector_frame implements the closed forms for e = 0 only")
    beta = m.beta
    g = m.gamma
    h = p.h
    bh = float(beta @ h)
    i1 = g * g * (float(h @ h) - bh * bh)
    if i1 <= _I1_FLOOR:
        raise DegenerateProjectorError(f"I1 = {i1:.3e} is not positive")
    eta = (g * g / np.sqrt(i1)) * h
    q = np.cross(beta, eta)
    s_vec = eta - beta * float(beta @ eta)
    S = AntisymTensor(-q, s_vec)
    s = tc.dual_vector(S, m.four_momentum)
    nu = (eta - (g / (g + 1.0)) * beta * float(beta @ eta)) / g
    return ProjectorFrame(S=S, eta=eta, s=s, nu=nu, I1=i1)


def s_from_S(S_vec: np.ndarray, beta: Beta3) -> np.ndarray:
    """Vector relation s = S/gamma + gamma beta (beta.S)."""
    return S_vec / beta.gamma + beta.gamma * beta.beta * float(beta.beta @ S_vec)


def S_from_s(s_vec: np.ndarray, beta: Beta3) -> np.ndarray:
    """Vector relation S = gamma [s - beta (beta.s)]."""
    return beta.gamma * (s_vec - beta.beta * float(beta.beta @ s_vec))


def _tensor_pairing_op(t: AntisymTensor, ops: so.OperatorTensor) -> np.ndarray:
    """(1/2) T_{mu nu} Op^{mu nu} as a single matrix.

    The operator tensor packs as (e, h) = (-Phi, Pi), so the pairing is
    T_h . Pi - T_e . (-Phi) = T_h . Pi + T_e . Phi.
    """
    out = np.zeros((4, 4), dtype=complex)
    for k in range(3):
        out = out + t.h[k] * ops.pi[k] + t.e[k] * ops.phi[k]
    return out


def _vector_dot_ops(vec: np.ndarray, ops) -> np.ndarray:
    return sum(vec[k] * ops[k] for k in range(3))


def invariant_chain_eq8(
    frame: ProjectorFrame, m: so.MomentumState, axis: so.SpinAxis
) -> tuple[float, float]:
    """Mean values of (s_alpha pi^alpha, (1/2) S_{mu nu} Pi^{mu nu}).

    The two agree for any eigenspinor; both equal zeta when the axis
    matches the frame direction nu.
    """
    phi = so.eigenspinors(m, axis)
    pi_ops = so.pi_mu(m)
    tens = so.Pi_munu(m)
    s = frame.s
    op1 = -s.t * pi_ops[0] + _vector_dot_ops(s.spatial, pi_ops[1:])
    op2 = _tensor_pairing_op(frame.S, tens)
    return (
        so._real_mean(op1, phi, "s.pi"),
        so._real_mean(op2, phi, "S:Pi/2"),
    )


def invariant_chain_eq9(
    frame: ProjectorFrame, m: so.MomentumState, axis: so.SpinAxis
) -> tuple[float, float, float]:
    """Mean values of (nu.Sigma, (S.pi)/gamma, (s.Pi)/gamma)."""
    phi = so.eigenspinors(m, axis)
    g = m.gamma
    sig = so.sigma_variant(m, "sigma")
    pi_ops = so.pi_mu(m)
    tens = so.Pi_munu(m)
    v1 = so._real_mean(_vector_dot_ops(frame.nu, sig), phi, "nu.Sigma")
    v2 = so._real_mean(_vector_dot_ops(frame.S_vec, pi_ops[1:]), phi, "S.pi") / g
    v3 = so._real_mean(_vector_dot_ops(frame.s.spatial, tens.pi), phi, "s.Pi") / g
    return v1, v2, v3


def classical_chain_eq8(
    frame: ProjectorFrame, pi4: FourVector, Pi_t: AntisymTensor
) -> tuple[float, float]:
    """Eq. (8) members with the operators replaced by classical mean values."""
    return (
        tc.minkowski_dot(frame.s, pi4),
        tc.contract(frame.S, Pi_t),
    )


def classical_chain_eq9(
    frame: ProjectorFrame,
    m: so.MomentumState,
    axis: so.SpinAxis,
    pi4: FourVector,
    Pi_t: AntisymTensor,
) -> tuple[float, float, float]:
    """Eq. (9) members with classical spin: zeta vector, pi, Pi."""
    g = m.gamma
    zeta_vec = axis.zeta * axis.nu
    pi_vec = Pi_t.h  # vector part of the classical spin tensor
    return (
        float(frame.nu @ zeta_vec),
        float(frame.S_vec @ pi4.spatial) / g,
        float(frame.s.spatial @ pi_vec) / g,
    )


def kinematic_invariants(
    m: so.MomentumState, axis: so.SpinAxis, frame: ProjectorFrame
) -> dict:
    """Spin invariants induced by the particle motion.

    The helicity chain (Sigma.beta, (beta.pi)/gamma, beta.Pi) agrees
    member-to-member for any eigenspinor; its common value is zeta*|beta|
    when the axis points along the motion.  The transverse chain projects
    the spin onto [k x beta] through the Phi component matrices:
    (nu.Phi, s.Phi, (S.Phi)/gamma).  The literal (S.Pi)/gamma member and
    the (eta.Phi)/gamma reading of the last written member are reported as
    diagnostics without an equality contract (see README).
    """
    bmag = float(np.linalg.norm(m.beta))
    if bmag < 1e-14:
        raise ZeroVelocityError("kinematic chains need |beta| > 0")
    phi = so.eigenspinors(m, axis)
    g = m.gamma
    sig = so.sigma_variant(m, "sigma")
    pi_ops = so.pi_mu(m)
    tens = so.Pi_munu(m)

    beta = m.beta
    helicity = (
        so._real_mean(_vector_dot_ops(beta, sig), phi, "Sigma.beta"),
        so._real_mean(_vector_dot_ops(beta, pi_ops[1:]), phi, "beta.pi") / g,
        so._real_mean(_vector_dot_ops(beta, tens.pi), phi, "beta.Pi"),
    )
    transverse = (
        so._real_mean(_vector_dot_ops(frame.nu, tens.phi), phi, "nu.Phi"),
        so._real_mean(_vector_dot_ops(frame.s.spatial, tens.phi), phi, "s.Phi"),
        so._real_mean(_vector_dot_ops(frame.S_vec, tens.phi), phi, "S.Phi") / g,
    )
    diagnostics = {
        "S_dot_Pi_over_gamma": so._real_mean(
            _vector_dot_ops(frame.S_vec, tens.pi), phi, "S.Pi"
        )
        / g,
        "eta_dot_Phi_over_gamma": so._real_mean(
            _vector_dot_ops(frame.eta, tens.phi), phi, "eta.Phi"
        )
        / g,
    }
    return {
        "helicity": helicity,
        "transverse": transverse,
        "transverse_diagnostics": diagnostics,
    }
