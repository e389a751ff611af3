"""Spectral decompositions: numerical and closed-form.

``diagonalize`` wraps a symmetric tridiagonal eigensolver and enforces a
residual contract. For the two special bond families the spectrum is known in
closed form:

* uniform bonds: E_k = -2J cos(k pi/(N+1)) - (N-2)B with sine-wave
  eigenvectors;
* engineered bonds: an exactly linear ladder
  E_k = -(2J/N) (N - (2k-1)) G_N - (N-2)B with eigenvectors built from
  binomial weights and Krawtchouk polynomials.

Both closed forms are returned in the same gauge the numerical solver uses
(each eigenvector's first nonvanishing component positive), so the two routes
agree column by column, not just up to sign. Because the bonds are positive
while the closed-form energies are written for the sign-flipped chain, the
eigenvectors carry a site-alternating factor (-1)^(n-1); the diagonal
similarity transform that flips every second site maps the two chains onto
each other without touching the spectrum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .chain import SingleExcitationHamiltonian, gn_factor
from .errors import InvalidInputError, NumericalFailureError

__all__ = [
    "SpectralDecomposition",
    "KrawtchoukTable",
    "diagonalize",
    "analytic_uniform_spectrum",
    "krawtchouk",
    "krawtchouk_table",
    "analytic_pst_spectrum",
]

# Residual contract for the eigensolver: ||H v - E v|| per column, relative to
# an infinity-norm bound on H. Dense LAPACK solvers land around 1e-14 here, so
# tripping this indicates genuine numerical trouble, not slack.
RESIDUAL_RTOL = 1e-9


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (ascending) and orthonormal eigenvectors (as columns).

    ``energies[k]`` pairs with column ``vectors[:, k]``. Every column's first
    nonvanishing component is positive, which fixes the overall sign freedom
    and makes decompositions from different routes directly comparable.
    """

    energies: np.ndarray
    vectors: np.ndarray

    def __post_init__(self) -> None:
        energies = np.asarray(self.energies, dtype=float)
        vectors = np.asarray(self.vectors, dtype=float)
        n = energies.size
        if energies.ndim != 1 or vectors.shape != (n, n):
            raise InvalidInputError("energies must be (N,) and vectors (N, N)")
        energies.setflags(write=False)
        vectors.setflags(write=False)
        object.__setattr__(self, "energies", energies)
        object.__setattr__(self, "vectors", vectors)

    @property
    def n_sites(self) -> int:
        return self.energies.size


def _fix_column_signs(vectors: np.ndarray) -> np.ndarray:
    """Flip columns so each one's first non-negligible component is positive."""
    fixed = vectors.copy()
    for k in range(fixed.shape[1]):
        col = fixed[:, k]
        threshold = 1e-12 * np.max(np.abs(col))
        for component in col:
            if abs(component) > threshold:
                if component < 0:
                    fixed[:, k] = -col
                break
    return fixed


def _tridiagonal_matvec(
    diag: np.ndarray, off: np.ndarray, vectors: np.ndarray
) -> np.ndarray:
    out = diag[:, None] * vectors
    out[:-1] += off[:, None] * vectors[1:]
    out[1:] += off[:, None] * vectors[:-1]
    return out


def diagonalize(
    hamiltonian: SingleExcitationHamiltonian, rtol: float = RESIDUAL_RTOL
) -> SpectralDecomposition:
    """Full eigendecomposition of the single-excitation block.

    Raises NumericalFailureError (carrying the worst per-column residual) if
    max_k ||H v_k - E_k v_k|| exceeds ``rtol`` times an infinity-norm bound
    on H.
    """
    if not isinstance(hamiltonian, SingleExcitationHamiltonian):
        raise InvalidInputError("hamiltonian must be a SingleExcitationHamiltonian")
    diag = hamiltonian.diagonal
    off = hamiltonian.offdiagonal
    energies, vectors = eigh_tridiagonal(diag, off)
    vectors = _fix_column_signs(vectors)

    norm_bound = float(
        np.max(
            np.abs(diag)
            + np.concatenate([[0.0], np.abs(off)])
            + np.concatenate([np.abs(off), [0.0]])
        )
    )
    residual = float(
        np.max(
            np.linalg.norm(
                _tridiagonal_matvec(diag, off, vectors) - energies[None, :] * vectors,
                axis=0,
            )
        )
    )
    if residual > rtol * max(norm_bound, 1.0):
        raise NumericalFailureError(
            f"eigensolver residual {residual:.3e} exceeds {rtol:.1e} * {norm_bound:.3e}",
            residual=residual,
        )
    return SpectralDecomposition(energies=energies, vectors=vectors)


def analytic_uniform_spectrum(
    n_sites: int, coupling: float, field: float
) -> SpectralDecomposition:
    """Closed-form spectrum of the uniform chain.

    E_k = -2J cos(k pi/(N+1)) - (N-2) B for k = 1..N, with eigenvectors
    v_k[n] = (-1)^(n-1) sqrt(2/(N+1)) sin(k pi n/(N+1)).
    """
    _check_chain_args(n_sites, coupling, field)
    n = n_sites
    k = np.arange(1, n + 1)
    theta = k * math.pi / (n + 1)
    energies = -2.0 * coupling * np.cos(theta) - (n - 2) * field
    sites = np.arange(1, n + 1)
    vectors = math.sqrt(2.0 / (n + 1)) * np.sin(np.outer(sites, theta))
    vectors *= np.where(sites % 2 == 1, 1.0, -1.0)[:, None]  # alternating gauge
    return SpectralDecomposition(energies=energies, vectors=vectors)


def krawtchouk(k: int, x: int, m: int) -> int:
    """Binary Krawtchouk polynomial K_k(x) on {0..m}, exact integer value.

    K_k(x) = sum_i (-1)^i C(x, i) C(m-x, k-i). Evaluated with exact integer
    arithmetic; no rounding at any size.
    """
    for name, value in (("k", k), ("x", x), ("m", m)):
        if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
            raise InvalidInputError(f"{name} must be an integer, got {value!r}")
    if m < 0 or not (0 <= k <= m and 0 <= x <= m):
        raise InvalidInputError(f"need 0 <= k, x <= m, got k={k}, x={x}, m={m}")
    total = 0
    for i in range(max(0, k - (m - x)), min(k, x) + 1):
        total += (-1) ** i * math.comb(x, i) * math.comb(m - x, k - i)
    return total


@dataclass(frozen=True)
class KrawtchoukTable:
    """Exact integer table K_k(x) for 0 <= k, x <= m (dtype=object, k rows)."""

    m: int
    values: np.ndarray

    def __post_init__(self) -> None:
        if self.values.shape != (self.m + 1, self.m + 1):
            raise InvalidInputError("table must be (m+1, m+1)")
        self.values.setflags(write=False)


def krawtchouk_table(m: int) -> KrawtchoukTable:
    """All K_k(x) for 0 <= k, x <= m as exact Python integers."""
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 0:
        raise InvalidInputError(f"m must be an integer >= 0, got {m!r}")
    values = np.empty((m + 1, m + 1), dtype=object)
    for k in range(m + 1):
        for x in range(m + 1):
            values[k, x] = krawtchouk(k, x, m)
    return KrawtchoukTable(m=int(m), values=values)


def analytic_pst_spectrum(
    n_sites: int, coupling: float, field: float
) -> SpectralDecomposition:
    """Closed-form spectrum of the engineered chain.

    The energies are an exactly linear ladder,
    E_k = -(2J/N) (N - (2k-1)) G_N - (N-2) B for k = 1..N, with spacing
    (4J/N) G_N. Eigenvector k is (-1)^(n-1) sqrt(w(n)) K_{k-1}(n-1)
    normalized to unit length, where w(n) = C(N-1, n-1) 2^(1-N) is the
    symmetric binomial weight.
    """
    _check_chain_args(n_sites, coupling, field)
    n = n_sites
    gn = gn_factor(n)
    k = np.arange(1, n + 1)
    energies = -(2.0 * coupling / n) * (n - (2 * k - 1)) * gn - (n - 2) * field

    table = krawtchouk_table(n - 1).values.astype(float)
    weights = np.array([math.comb(n - 1, j) for j in range(n)], dtype=float)
    weights *= 0.5 ** (n - 1)
    # column k-1 of the decomposition is sqrt(w(n)) K_{k-1}(n-1) over sites n
    vectors = np.sqrt(weights)[:, None] * table.T
    vectors /= np.linalg.norm(vectors, axis=0)[None, :]
    sites = np.arange(1, n + 1)
    vectors *= np.where(sites % 2 == 1, 1.0, -1.0)[:, None]  # alternating gauge
    return SpectralDecomposition(energies=energies, vectors=vectors)


def _check_chain_args(n_sites: int, coupling: float, field: float) -> None:
    if isinstance(n_sites, bool) or not isinstance(n_sites, (int, np.integer)):
        raise InvalidInputError(f"n_sites must be an integer, got {n_sites!r}")
    if n_sites < 2:
        raise InvalidInputError(f"n_sites must be >= 2, got {n_sites}")
    for name, value in (("coupling", coupling), ("field", field)):
        if not math.isfinite(value):
            raise InvalidInputError(f"{name} must be finite, got {value!r}")
        if value <= 0:
            raise InvalidInputError(f"{name} must be > 0, got {value}")
