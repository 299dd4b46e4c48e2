"""Spin operators of a free Dirac particle with definite momentum.

All operators are built for a dimensionless momentum b (four-momentum over
m0*c), with gamma = sqrt(1 + b^2) and the on-shell four-vector b^mu =
(gamma, b).  The positive-energy subspace is the +gamma eigenspace of the
free Hamiltonian h = (alpha.b) + rho3; "on solutions" below always means
restricted to that 2-dimensional subspace.

The four-vector operator is pi^mu = (gamma^mu + i b^mu) gamma^5 and the
tensor operator is Pi^{mu nu} = sigma^{mu nu} - (gamma^mu b^nu -
gamma^nu b^mu), packed like every other antisymmetric tensor here: the
Phi_k component matrices sit at Pi^{k0} and the Pi_k vector part at the
cyclic spatial slots.  The spatial displays (pi_k = rho3 sigma_k + rho1 b_k,
Pi_k = sigma_k + rho2 [sigma x b]_k) hold as full matrix identities; the
time/mixed displays (pi^0 -> (b.sigma), Phi -> rho3 [sigma x b]) hold on
solutions only and are treated that way.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from . import clifford
from .errors import (
    ConventionViolationError,
    SingularVariantError,
    SubspaceLeakageError,
)
from .tensor_core import AntisymTensor, Beta3, FourVector

#: Names of the spin-vector operator variants.
VARIANTS = ("sigma", "rho3_sigma", "stech", "fw")

_SEED_NORM_FLOOR = 1e-10


@dataclass(frozen=True)
class MomentumState:
    """On-shell dimensionless momentum: gamma = sqrt(1 + b^2), beta = b/gamma."""

    b: np.ndarray
    gamma: float
    beta: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "b", np.asarray(self.b, dtype=float).copy())
        object.__setattr__(self, "beta", np.asarray(self.beta, dtype=float).copy())
        if self.b.shape != (3,):
            raise ValueError("b must be a 3-vector")

    @classmethod
    def from_b(cls, b) -> "MomentumState":
        b = np.asarray(b, dtype=float)
        g = float(np.sqrt(1.0 + b @ b))
        return cls(b, g, b / g)

    @classmethod
    def from_beta(cls, beta) -> "MomentumState":
        bb = Beta3.from_velocity(beta)
        return cls(bb.gamma * bb.beta, bb.gamma, bb.beta)

    @property
    def four_momentum(self) -> FourVector:
        return FourVector(self.gamma, *self.b)

    @property
    def beta3(self) -> Beta3:
        return Beta3(self.beta, self.gamma)


@dataclass(frozen=True)
class SpinAxis:
    """Rest-frame quantization direction (unit 3-vector) and eigenvalue sign."""

    nu: np.ndarray
    zeta: int

    def __post_init__(self):
        n = np.asarray(self.nu, dtype=float)
        norm = float(np.linalg.norm(n))
        if norm < 1e-14:
            raise ValueError("quantization direction must be nonzero")
        object.__setattr__(self, "nu", n / norm)
        if self.zeta not in (-1, 1):
            raise ValueError(f"zeta must be +1 or -1, got {self.zeta}")


def hamiltonian(m: MomentumState) -> np.ndarray:
    """h = (alpha.b) + rho3, eigenvalues +/-gamma (each twice)."""
    h = clifford.rho(3).astype(complex)
    for k in range(3):
        h = h + m.b[k] * clifford.alpha(k + 1)
    return h


def energy_projector(m: MomentumState) -> np.ndarray:
    """P+ = (h + gamma)/(2 gamma), rank-2 projector on positive energy."""
    return (hamiltonian(m) + m.gamma * clifford.IDENTITY) / (2.0 * m.gamma)


def pi_mu(m: MomentumState) -> list[np.ndarray]:
    """The four matrices pi^mu = (gamma^mu + i b^mu) gamma^5."""
    b4 = m.four_momentum.array
    g5 = clifford.gamma5()
    return [
        (clifford.gamma(mu) + 1j * b4[mu] * clifford.IDENTITY) @ g5 for mu in range(4)
    ]


@dataclass(frozen=True)
class OperatorTensor:
    """Antisymmetric tensor of matrices, packed like AntisymTensor.

    phi[k] is the component matrix at T^{k0}; pi[k] sits at the cyclic
    spatial slots (pi[2] at T^{12} and so on).
    """

    phi: tuple
    pi: tuple

    def component(self, mu: int, nu: int) -> np.ndarray:
        grid = self._grid()
        return grid[mu][nu]

    def _grid(self):
        z = np.zeros((4, 4), dtype=complex)
        p, q = self.phi, self.pi
        return (
            (z, -p[0], -p[1], -p[2]),
            (p[0], z, q[2], -q[1]),
            (p[1], -q[2], z, q[0]),
            (p[2], q[1], -q[0], z),
        )


def Pi_munu(m: MomentumState) -> OperatorTensor:
    """Pi^{mu nu} = sigma^{mu nu} - (gamma^mu b^nu - gamma^nu b^mu)."""
    b4 = m.four_momentum.array
    gam = [clifford.gamma(mu) for mu in range(4)]

    def comp(mu, nu):
        return clifford.sigma_tensor(mu, nu) - (gam[mu] * b4[nu] - gam[nu] * b4[mu])

    phi = tuple(comp(k, 0) for k in (1, 2, 3))
    pi = (comp(2, 3), comp(3, 1), comp(1, 2))
    return OperatorTensor(phi=phi, pi=pi)


def _cross_matrices(vec_ops, b):
    """[V x b]_k for a 3-tuple of matrices V and a numeric 3-vector b."""
    return [
        vec_ops[1] * b[2] - vec_ops[2] * b[1],
        vec_ops[2] * b[0] - vec_ops[0] * b[2],
        vec_ops[0] * b[1] - vec_ops[1] * b[0],
    ]


def sigma_variant(m: MomentumState, variant: str = "sigma") -> list[np.ndarray]:
    """Component matrices of the requested spin-vector operator Sigma.

    Variants: "sigma" (unitary transform of the sigma matrices),
    "rho3_sigma", "stech" (undefined at b = 0), "fw" (Foldy-Wouthuysen).
    All coincide when applied to solutions of the free Dirac equation.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}, expected one of {VARIANTS}")
    b = m.b
    g = m.gamma
    sig = [clifford.sigma_small(k) for k in (1, 2, 3)]
    if variant == "sigma":
        al = [clifford.alpha(k) for k in (1, 2, 3)]
        axb = _cross_matrices(al, b)
        pref = (clifford.IDENTITY - clifford.rho(3)) * (1j / (g + 1.0))
        return [sig[k] + pref @ axb[k] for k in range(3)]
    if variant == "rho3_sigma":
        r3, r1 = clifford.rho(3), clifford.rho(1)
        sdotb = sum(sig[k] * b[k] for k in range(3))
        return [
            r3 @ sig[k]
            + r1 * (b[k] / g)
            - (r3 @ sdotb) * (b[k] / (g * (g + 1.0)))
            for k in range(3)
        ]
    if variant == "stech":
        if g * g - 1.0 < 1e-28:
            raise SingularVariantError("Stech operator is singular at b = 0")
        r3 = clifford.rho(3)
        sdotb = sum(sig[k] * b[k] for k in range(3))
        pref = (clifford.IDENTITY - r3) / (g * g - 1.0)
        return [r3 @ sig[k] + pref @ sdotb * b[k] for k in range(3)]
    # Foldy-Wouthuysen
    al = [clifford.alpha(k) for k in (1, 2, 3)]
    axb = _cross_matrices(al, b)
    r3 = clifford.rho(3)
    sdotb = sum(sig[k] * b[k] for k in range(3))
    b2 = float(b @ b)
    return [
        sig[k]
        - (1j / g) * r3 @ axb[k]
        - (sig[k] * b2 - sdotb * b[k]) / (g * (g + 1.0))
        for k in range(3)
    ]


def spin_projector(m: MomentumState, axis: SpinAxis) -> np.ndarray:
    """(I + zeta Sigma_sigma . nu)/2."""
    sig = sigma_variant(m, "sigma")
    sdotn = sum(sig[k] * axis.nu[k] for k in range(3))
    return 0.5 * (clifford.IDENTITY + axis.zeta * sdotn)


def eigenspinors(m: MomentumState, axis: SpinAxis) -> np.ndarray:
    """Normalized spinor with h*phi = gamma*phi and (Sigma.nu)*phi = zeta*phi.

    Built by applying the commuting projectors P+ and (I + zeta Sigma.nu)/2
    to canonical basis seeds until one survives, then normalizing.  The
    phase is fixed by making the largest-magnitude component real positive,
    so outputs are deterministic.
    """
    proj = spin_projector(m, axis) @ energy_projector(m)
    for seed in range(4):
        vec = proj[:, seed].copy()
        norm = float(np.linalg.norm(vec))
        if norm > _SEED_NORM_FLOOR:
            phi = vec / norm
            k = int(np.argmax(np.abs(phi)))
            phi = phi * (abs(phi[k]) / phi[k])
            return phi
    raise RuntimeError("no canonical seed survived projection; invalid inputs?")


def mean_value(op: np.ndarray, phi: np.ndarray) -> complex:
    """phi^dagger A phi."""
    return complex(np.conj(phi) @ (op @ phi))


def _real_mean(op: np.ndarray, phi: np.ndarray, what: str, tol: float = 1e-10) -> float:
    val = mean_value(op, phi)
    if abs(val.imag) > tol:
        raise ConventionViolationError(
            f"mean value of {what} has imaginary part {val.imag:.3e}"
        )
    return val.real


def subspace_basis(m: MomentumState) -> np.ndarray:
    """Orthonormal 4x2 basis of the positive-energy subspace."""
    p = energy_projector(m)
    q, _, _ = scipy.linalg.qr(p, pivoting=True)
    return q[:, :2]


def restricted_eigenvalues(op: np.ndarray, m: MomentumState) -> tuple[float, float]:
    """Eigenvalues of an operator restricted to positive energy, ascending.

    Raises SubspaceLeakageError when the operator maps the subspace
    outside itself beyond 1e-10.
    """
    p = energy_projector(m)
    leak = np.linalg.norm((clifford.IDENTITY - p) @ op @ p)
    if leak > 1e-10:
        raise SubspaceLeakageError(
            f"operator leaks off the positive-energy subspace (|(1-P)AP| = {leak:.3e})"
        )
    q = subspace_basis(m)
    small = np.conj(q.T) @ op @ q
    vals = np.linalg.eigvals(small)
    if np.abs(vals.imag).max() > 1e-10:
        raise ConventionViolationError(
            f"restricted eigenvalues not real: {vals}"
        )
    lo, hi = sorted(vals.real)
    return float(lo), float(hi)


def classical_spin(m: MomentumState, axis: SpinAxis) -> tuple[FourVector, AntisymTensor]:
    """Mean values of pi^mu and (Phi, Pi) on the matching eigenspinor.

    Imaginary parts (each below 1e-12 in exact arithmetic) are checked
    against 1e-10 and discarded.
    """
    phi = eigenspinors(m, axis)
    pi_ops = pi_mu(m)
    tens = Pi_munu(m)
    pi4 = FourVector.from_array(
        [_real_mean(pi_ops[mu], phi, f"pi^{mu}") for mu in range(4)]
    )
    phi_vec = np.array(
        [_real_mean(tens.phi[k], phi, f"Phi_{k}") for k in range(3)]
    )
    pi_vec = np.array(
        [_real_mean(tens.pi[k], phi, f"Pi_{k}") for k in range(3)]
    )
    # Phi_k sits at T^{k0} = -e_k, so the stored e-part is -Phi.
    return pi4, AntisymTensor(-phi_vec, pi_vec)


@dataclass(frozen=True)
class OperatorSet:
    """Every operator for one momentum, built once for inspection or reuse."""

    momentum: MomentumState
    hamiltonian: np.ndarray
    pi: tuple
    Pi: OperatorTensor
    sigma: dict = field(default_factory=dict)


def operator_set(m: MomentumState) -> OperatorSet:
    sigmas = {}
    for name in VARIANTS:
        try:
            sigmas[name] = tuple(sigma_variant(m, name))
        except SingularVariantError:
            pass
    return OperatorSet(
        momentum=m,
        hamiltonian=hamiltonian(m),
        pi=tuple(pi_mu(m)),
        Pi=Pi_munu(m),
        sigma=sigmas,
    )
