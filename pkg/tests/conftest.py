"""Shared oracles for the test suite.

These are deliberately independent implementations: a dense matrix builder, a
fixed-step RK4 integrator for the Schrodinger equation, a full-Hilbert-space
(2^N) evolution with partial trace, and a sort-the-eigenvalues ergotropy.
They share no code with the package routes they check.
"""

from __future__ import annotations

import numpy as np


def dense_hamiltonian(diagonal: np.ndarray, offdiagonal: np.ndarray) -> np.ndarray:
    n = len(diagonal)
    h = np.diag(np.asarray(diagonal, dtype=float))
    for j in range(n - 1):
        h[j, j + 1] = offdiagonal[j]
        h[j + 1, j] = offdiagonal[j]
    return h


def rk4_propagate(h: np.ndarray, psi0: np.ndarray, t_final: float, dt: float) -> np.ndarray:
    """Integrate i dpsi/dt = H psi with classic fixed-step RK4."""

    def deriv(psi: np.ndarray) -> np.ndarray:
        return -1j * (h @ psi)

    steps = int(round(t_final / dt))
    psi = psi0.astype(complex).copy()
    for _ in range(steps):
        k1 = deriv(psi)
        k2 = deriv(psi + 0.5 * dt * k1)
        k3 = deriv(psi + 0.5 * dt * k2)
        k4 = deriv(psi + dt * k3)
        psi = psi + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    remainder = t_final - steps * dt
    if abs(remainder) > 1e-15:
        k1 = deriv(psi)
        k2 = deriv(psi + 0.5 * remainder * k1)
        k3 = deriv(psi + 0.5 * remainder * k2)
        k4 = deriv(psi + remainder * k3)
        psi = psi + (remainder / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return psi


def full_hilbert_receiver_state(
    bonds: np.ndarray, field: float, theta: float, phi: float, t: float
) -> np.ndarray:
    """Receiver qubit density matrix from the full 2^N evolution.

    Builds the complete spin Hamiltonian (hopping bonds plus a -field
    contribution per down-spin... i.e. each up-spin raises the energy by
    2*field relative to all-down), evolves the product initial state exactly
    by diagonalization, and traces out all sites but the last. Basis: bit b_i
    = 1 means site i carries the excitation. Feasible up to N ~ 10.
    Returns the 2x2 matrix in the (|0>, |1>) basis of the receiver.
    """
    n = len(bonds) + 1
    dim = 2**n
    h = np.zeros((dim, dim))
    for state in range(dim):
        ups = bin(state).count("1")
        h[state, state] = -(n - 2 * ups) * field
    for j in range(n - 1):
        bit_j, bit_k = 1 << j, 1 << (j + 1)
        for state in range(dim):
            # hopping moves one excitation between neighbours j, j+1
            if (state & bit_j) and not (state & bit_k):
                other = state ^ bit_j ^ bit_k
                h[state, other] += bonds[j]
                h[other, state] += bonds[j]
    psi = np.zeros(dim, dtype=complex)
    psi[0] = np.cos(theta / 2.0)
    psi[1] = np.exp(1j * phi) * np.sin(theta / 2.0)  # excitation at site 1 (bit 0)
    energies, vectors = np.linalg.eigh(h)
    psi_t = vectors @ (np.exp(-1j * energies * t) * (vectors.conj().T @ psi))
    # bit n-1 is the receiver, so reshaping to (2, 2^(n-1)) groups the
    # amplitudes by receiver value and the rest traces out as a gram matrix
    amplitudes = psi_t.reshape(2, dim // 2)
    return amplitudes @ amplitudes.conj().T


def ergotropy_by_sorting(rho: np.ndarray, h: np.ndarray) -> float:
    """Ergotropy tr(rho h) - min_U tr(U rho U^+ h) via eigenvalue sorting.

    The passive state pairs the largest population with the lowest energy
    level, so the minimum is sum_i p_sorted_desc[i] * e_sorted_asc[i].
    """
    populations = np.linalg.eigvalsh(rho)
    levels = np.linalg.eigvalsh(h)
    active = float(np.real(np.trace(rho @ h)))
    passive = float(np.sum(np.sort(populations)[::-1] * np.sort(levels)))
    return active - passive
