"""Minkowski-space primitives under the metric g = diag(-1, 1, 1, 1).

Four-vectors are contravariant.  Antisymmetric rank-2 tensors are stored as
an (e, h) pair of real 3-vectors with independent components

    T^{10} = -e_x,  T^{20} = -e_y,  T^{30} = -e_z,
    T^{23} =  h_x,  T^{31} =  h_y,  T^{12} =  h_z,

so antisymmetry of the unpacked 4x4 array is exact by construction.  A field
tensor packs as (E, H); in the tuple display used throughout the docs the
first slot shows the T^{k0} components, i.e. (-e, h).

The Levi-Civita symbol is fixed to eps^{0123} = +1.  The sign was pinned by
requiring that the dual vector of the spin tensor reproduce the component
form ((beta.eta), eta)/gamma; `diracspin verify` re-checks this numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .errors import ConventionViolationError, InvalidVelocityError

METRIC_SIGNATURE = np.array([-1.0, 1.0, 1.0, 1.0])
METRIC = np.diag(METRIC_SIGNATURE)


def _build_levi_civita() -> np.ndarray:
    eps = np.zeros((4, 4, 4, 4))
    for perm in permutations(range(4)):
        inversions = sum(
            1 for i in range(4) for j in range(i + 1, 4) if perm[i] > perm[j]
        )
        eps[perm] = -1.0 if inversions % 2 else 1.0
    return eps


#: eps^{alpha beta mu nu} with all indices upper and eps^{0123} = +1.
LEVI_CIVITA = _build_levi_civita()


@dataclass(frozen=True)
class FourVector:
    """Real contravariant four-vector (t, x, y, z)."""

    t: float
    x: float
    y: float
    z: float

    def __post_init__(self):
        if not np.all(np.isfinite(self.array)):
            raise ConventionViolationError(f"non-finite four-vector {self}")

    @classmethod
    def from_array(cls, arr) -> "FourVector":
        a = np.asarray(arr, dtype=float)
        if a.shape != (4,):
            raise ValueError(f"expected 4 components, got shape {a.shape}")
        return cls(float(a[0]), float(a[1]), float(a[2]), float(a[3]))

    @property
    def array(self) -> np.ndarray:
        return np.array([self.t, self.x, self.y, self.z])

    @property
    def spatial(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])


@dataclass(frozen=True)
class AntisymTensor:
    """Antisymmetric rank-2 tensor stored as the (e, h) 3-vector pair."""

    e: np.ndarray
    h: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "e", np.asarray(self.e, dtype=float).copy())
        object.__setattr__(self, "h", np.asarray(self.h, dtype=float).copy())
        if self.e.shape != (3,) or self.h.shape != (3,):
            raise ValueError("e and h must be 3-vectors")
        if not (np.all(np.isfinite(self.e)) and np.all(np.isfinite(self.h))):
            raise ConventionViolationError("non-finite tensor components")

    def scaled(self, factor: float) -> "AntisymTensor":
        return AntisymTensor(self.e * factor, self.h * factor)


@dataclass(frozen=True)
class Beta3:
    """Velocity 3-vector in units of c, |beta| < 1, with its Lorentz factor."""

    beta: np.ndarray
    gamma: float

    def __post_init__(self):
        object.__setattr__(self, "beta", np.asarray(self.beta, dtype=float).copy())
        if self.beta.shape != (3,):
            raise ValueError("beta must be a 3-vector")

    @classmethod
    def from_velocity(cls, beta) -> "Beta3":
        b = np.asarray(beta, dtype=float)
        b2 = float(b @ b)
        if b2 >= 1.0:
            raise InvalidVelocityError(f"|beta| = {np.sqrt(b2):.6g} >= 1")
        return cls(b, 1.0 / np.sqrt(1.0 - b2))


def _vec4(a) -> np.ndarray:
    if isinstance(a, FourVector):
        return a.array
    arr = np.asarray(a, dtype=float)
    if arr.shape != (4,):
        raise ValueError(f"expected a four-vector, got shape {arr.shape}")
    return arr


def _beta(b) -> Beta3:
    if isinstance(b, Beta3):
        return b
    return Beta3.from_velocity(b)


def minkowski_dot(a, b) -> float:
    """a_mu b^mu = -a0*b0 + a.b"""
    av, bv = _vec4(a), _vec4(b)
    return float(av @ (METRIC_SIGNATURE * bv))


def pack(e, h) -> AntisymTensor:
    """Pack two 3-vectors into an antisymmetric tensor, T^{10} = -e_x etc."""
    return AntisymTensor(np.asarray(e, dtype=float), np.asarray(h, dtype=float))


def unpack(t: AntisymTensor) -> np.ndarray:
    """Expand to the full contravariant 4x4 array T^{mu nu}."""
    e, h = t.e, t.h
    return np.array(
        [
            [0.0, e[0], e[1], e[2]],
            [-e[0], 0.0, h[2], -h[1]],
            [-e[1], -h[2], 0.0, h[0]],
            [-e[2], h[1], -h[0], 0.0],
        ]
    )


def from_array(arr, rtol: float = 1e-12) -> AntisymTensor:
    """Pack a 4x4 contravariant array, validating antisymmetry.

    Raises ConventionViolationError when the symmetric part exceeds rtol
    relative to the largest entry.  The tiny symmetric residue left by
    floating-point products is averaged away.
    """
    a = np.asarray(arr, dtype=float)
    if a.shape != (4, 4):
        raise ValueError("expected a 4x4 array")
    scale = max(1.0, float(np.abs(a).max()))
    asym = a + a.T
    if np.abs(asym).max() > rtol * scale:
        raise ConventionViolationError(
            f"array is not antisymmetric (residual {np.abs(asym).max():.3e})"
        )
    a = 0.5 * (a - a.T)
    return AntisymTensor(
        np.array([a[0, 1], a[0, 2], a[0, 3]]),
        np.array([a[2, 3], a[3, 1], a[1, 2]]),
    )


def contract(a: AntisymTensor, b: AntisymTensor) -> float:
    """(1/2) A_{mu nu} B^{mu nu}; for A = B = (-e, h) this is h^2 - e^2."""
    return float(a.h @ b.h - a.e @ b.e)


def lower2(arr: np.ndarray) -> np.ndarray:
    """Lower both indices of a rank-2 contravariant array."""
    return METRIC @ arr @ METRIC


def dual_vector(t: AntisymTensor, b) -> FourVector:
    """s^alpha = (1/2) eps^{alpha beta mu nu} T_{mu nu} b_beta."""
    t_dn = lower2(unpack(t))
    b_dn = METRIC_SIGNATURE * _vec4(b)
    s = 0.5 * np.einsum("abmn,mn,b->a", LEVI_CIVITA, t_dn, b_dn)
    return FourVector.from_array(s)


def dual_tensor(s, b) -> AntisymTensor:
    """T^{mu nu} = eps^{mu nu alpha beta} s_alpha b_beta."""
    s_dn = METRIC_SIGNATURE * _vec4(s)
    b_dn = METRIC_SIGNATURE * _vec4(b)
    arr = np.einsum("mnab,a,b->mn", LEVI_CIVITA, s_dn, b_dn)
    return from_array(arr)


def boost_matrix(beta) -> np.ndarray:
    """Active boost: maps (1, 0, 0, 0) onto gamma*(1, beta)."""
    bb = _beta(beta)
    b = bb.beta
    g = bb.gamma
    b2 = float(b @ b)
    lam = np.eye(4)
    lam[0, 0] = g
    lam[0, 1:] = g * b
    lam[1:, 0] = g * b
    if b2 > 0.0:
        lam[1:, 1:] += (g - 1.0) / b2 * np.outer(b, b)
    return lam


def boost_vector(a, beta) -> FourVector:
    return FourVector.from_array(boost_matrix(beta) @ _vec4(a))


def boost_tensor(t: AntisymTensor, beta) -> AntisymTensor:
    lam = boost_matrix(beta)
    return from_array(lam @ unpack(t) @ lam.T)
