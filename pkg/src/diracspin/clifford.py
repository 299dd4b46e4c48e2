"""Dirac matrix algebra in the standard (Dirac-Pauli) representation.

The rho matrices act on the outer 2x2 block index, the sigma matrices act
inside the blocks, alpha = rho1*sigma, and

    gamma^0 = i rho3,   gamma^k = i rho3 alpha_k,   gamma^5 = -i rho1,

which satisfies {gamma^mu, gamma^nu} = 2 g^{mu nu} with g = diag(-1,1,1,1).
The tensor generator is normalized as sigma^{mu nu} = -(i/2)[gamma^mu,
gamma^nu]; this reproduces sigma^{12} = sigma3 and sigma^{10} = -i alpha1.
"""

from __future__ import annotations

import numpy as np

from .tensor_core import METRIC_SIGNATURE

_PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
_I2 = np.eye(2, dtype=complex)

IDENTITY = np.eye(4, dtype=complex)


def _check_index(i: int) -> None:
    if i not in (1, 2, 3):
        raise ValueError(f"matrix index must be 1, 2 or 3, got {i}")


def rho(i: int) -> np.ndarray:
    """rho_i = pauli_i on the block index."""
    _check_index(i)
    return np.kron(_PAULI[i - 1], _I2)


def sigma_small(i: int) -> np.ndarray:
    """sigma_i = pauli_i inside each block."""
    _check_index(i)
    return np.kron(_I2, _PAULI[i - 1])


def alpha(i: int) -> np.ndarray:
    """alpha_i = rho1 sigma_i."""
    _check_index(i)
    return rho(1) @ sigma_small(i)


def gamma(mu: int) -> np.ndarray:
    """gamma^0 = i rho3, gamma^k = i rho3 alpha_k."""
    if mu == 0:
        return 1j * rho(3)
    if mu in (1, 2, 3):
        return 1j * rho(3) @ alpha(mu)
    raise ValueError(f"gamma index must be 0..3, got {mu}")


def gamma5() -> np.ndarray:
    """gamma^5 = -i rho1."""
    return -1j * rho(1)


def sigma_tensor(mu: int, nu: int) -> np.ndarray:
    """sigma^{mu nu} = -(i/2)[gamma^mu, gamma^nu]; zero for mu == nu."""
    if mu == nu:
        return np.zeros((4, 4), dtype=complex)
    return -0.5j * commutator(gamma(mu), gamma(nu))


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b + b @ a


def adjoint(a: np.ndarray) -> np.ndarray:
    return np.asarray(a).conj().T


def metric_component(mu: int, nu: int) -> float:
    """g^{mu nu} of diag(-1, 1, 1, 1)."""
    return float(METRIC_SIGNATURE[mu]) if mu == nu else 0.0
