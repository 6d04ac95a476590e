"""Quasiprobability functions on the N x N discrete phase space.

Grids are indexed ``values[mu + l, nu + l]``; row ``r`` of the Husimi matrix
corresponds to ``mu = r - l`` (0-based) and column ``c`` to ``nu = c - l``.

The raw Husimi function ``F^(-1)`` sums to ``N`` over the grid.  Every entropy
and correlation functional here works on the probability matrix
``h = F^(-1) / N``, which sums to one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import TOLERANCES, Tolerances
from .errors import DimensionMismatch, NegativeMass, NotHermitian, NotNormalized
from .linalg import eig_general, qr_eigvals
from .schwinger import KernelTable, labels

__all__ = [
    "PhaseSpaceGrid",
    "HusimiSplit",
    "validate_density",
    "characteristic_function",
    "quasiprob",
    "quasiprob_from_characteristic",
    "wigner",
    "husimi_prob",
    "marginals",
    "shannon_entropy",
    "joint_entropy",
    "husimi_split",
    "eigen_entropy",
    "husimi_split_and_eigenentropy",
    "mutual_correlation",
]

KINDS = ("characteristic", "quasiprob", "husimi-prob")


@dataclass(frozen=True)
class PhaseSpaceGrid:
    values: np.ndarray
    kind: str
    s: complex | None = None

    @property
    def dim(self) -> int:
        return self.values.shape[0]

    @property
    def labels(self) -> np.ndarray:
        return labels(self.dim)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.values, dtype=dtype)

    def at(self, mu: int, nu: int):
        ell = (self.dim - 1) // 2
        return self.values[mu + ell, nu + ell]


@dataclass(frozen=True)
class HusimiSplit:
    A: np.ndarray
    B: np.ndarray
    lam: np.ndarray
    sigmaA: np.ndarray
    sigmaB: np.ndarray


def validate_density(rho, tol: Tolerances = TOLERANCES) -> np.ndarray:
    """Check that ``rho`` is a density operator and return it as a complex array."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise DimensionMismatch(f"density matrix must be square, got {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > tol.hermitian_input:
        raise NotHermitian("density matrix is not Hermitian")
    if abs(np.trace(rho) - 1) > tol.density_trace:
        raise NotNormalized(f"trace(rho) = {np.trace(rho)}")
    if np.linalg.eigvalsh((rho + rho.conj().T) / 2).min() < -tol.density_psd:
        raise NegativeMass("density matrix has a negative eigenvalue")
    return rho


def _check_dims(rho: np.ndarray, kernels: KernelTable) -> None:
    if rho.shape[0] != kernels.dim:
        raise DimensionMismatch(f"rho is {rho.shape[0]}-dimensional, kernels are {kernels.dim}")


def _contract(table: np.ndarray, rho: np.ndarray) -> np.ndarray:
    # Tr[X(a, b) rho] for every (a, b)
    n = rho.shape[0]
    return (table.reshape(n * n, n * n) @ rho.T.reshape(n * n)).reshape(n, n)


def _real_if_small(values: np.ndarray, s, tol: float) -> np.ndarray:
    if np.imag(s) == 0:
        if np.max(np.abs(values.imag)) > tol:
            raise ArithmeticError("quasiprobability has a non-negligible imaginary part")
        return values.real.copy()
    return values


def characteristic_function(rho, s, kernels: KernelTable, tol: Tolerances = TOLERANCES) -> PhaseSpaceGrid:
    """``Xi^(s)(eta, xi) = Tr[S^(s)(eta, xi) rho]``."""
    rho = validate_density(rho, tol)
    _check_dims(rho, kernels)
    return PhaseSpaceGrid(_contract(kernels.S[s], rho), "characteristic", s)


def quasiprob_from_characteristic(chi: PhaseSpaceGrid) -> np.ndarray:
    """Double DFT ``N^{-1/2} sum exp[-2 pi i (eta mu + xi nu)/N] Xi(eta, xi)``."""
    n = chi.dim
    lab = labels(n)
    f = np.exp(-2j * np.pi * (np.outer(lab, lab) % n) / n)
    return f @ chi.values @ f.T / np.sqrt(n)


def quasiprob(rho, s, kernels: KernelTable, path: str = "trace", tol: Tolerances = TOLERANCES) -> PhaseSpaceGrid:
    """Parametrized function ``F^(s)(mu, nu) = Tr[T^(s)(mu, nu) rho]``.

    ``path="fourier"`` evaluates the same grid as the double Fourier transform
    of :func:`characteristic_function`.  For real ``s`` the result is real.
    """
    rho = validate_density(rho, tol)
    _check_dims(rho, kernels)
    if path == "trace":
        values = _contract(kernels.T[s], rho)
    elif path == "fourier":
        values = quasiprob_from_characteristic(characteristic_function(rho, s, kernels, tol))
    else:
        raise ValueError(f"unknown path {path!r}")
    return PhaseSpaceGrid(_real_if_small(values, s, tol.kernel), "quasiprob", s)


def wigner(rho, kernels: KernelTable, tol: Tolerances = TOLERANCES) -> PhaseSpaceGrid:
    return quasiprob(rho, 0, kernels, tol=tol)


def husimi_prob(rho, kernels: KernelTable, path: str = "direct", tol: Tolerances = TOLERANCES) -> PhaseSpaceGrid:
    """Probability-normalized Husimi matrix ``h = F^(-1) / N``.

    ``path="smoothing"`` instead smooths the Wigner function with the kernel
    ``E``: ``h(mu, nu) = N^-2 sum_{mu' nu'} E(mu, nu | mu', nu') W(mu', nu')``.
    """
    n = kernels.dim
    if path == "direct":
        raw = quasiprob(rho, -1, kernels, tol=tol).values
    elif path == "smoothing":
        w = wigner(rho, kernels, tol).values
        raw = np.tensordot(kernels.E, w, axes=([2, 3], [0, 1])) / n
    else:
        raise ValueError(f"unknown path {path!r}")
    return PhaseSpaceGrid(raw / n, "husimi-prob", -1)


def _as_prob_grid(h) -> np.ndarray:
    return np.asarray(h.values if isinstance(h, PhaseSpaceGrid) else h, dtype=float)


def marginals(h, tol: Tolerances = TOLERANCES) -> tuple[np.ndarray, np.ndarray]:
    """Row sums ``Q(mu)`` and column sums ``R(nu)`` of a normalized grid."""
    h = _as_prob_grid(h)
    if abs(h.sum() - 1) > tol.normalization:
        raise NotNormalized(f"grid sums to {h.sum()}")
    return h.sum(axis=1), h.sum(axis=0)


def shannon_entropy(p, tol: Tolerances = TOLERANCES) -> float:
    """``-sum p ln p`` over all entries, with ``0 ln 0 = 0``.

    Small negative entries are rounding noise and are set to zero; anything
    below ``-tol.negative_mass`` raises :class:`NegativeMass`.
    """
    p = np.asarray(_as_prob_grid(p), dtype=float).ravel()
    if p.size and p.min() < -tol.negative_mass:
        raise NegativeMass(f"entry {p.min():.3e} is negative")
    p = np.clip(p, 0.0, None)
    nz = p[p > 0]
    return float(max(-np.sum(nz * np.log(nz)), 0.0))


def joint_entropy(h, tol: Tolerances = TOLERANCES) -> float:
    return shannon_entropy(h, tol)


def husimi_split(h, solver: str = "lapack") -> HusimiSplit:
    h = _as_prob_grid(h)
    a = (h + h.T) / 2
    b = h - a
    if solver == "lapack":
        lam = eig_general(h).values
    elif solver == "qr":
        lam = qr_eigvals(h)
    else:
        raise ValueError(f"unknown solver {solver!r}")
    sigma_a = np.linalg.eigvalsh(a)
    sigma_b = np.linalg.eigvals(b)
    sigma_b = sigma_b[np.argsort(sigma_b.imag, kind="stable")]
    return HusimiSplit(a, b, lam, sigma_a, sigma_b)


def eigen_entropy(lam) -> float:
    """``-sum |lambda| ln |lambda|`` over (possibly complex) eigenvalues."""
    mod = np.abs(np.asarray(lam))
    mod = mod[mod > 0]
    return float(-np.sum(mod * np.log(mod)))


def husimi_split_and_eigenentropy(h, solver: str = "lapack") -> tuple[HusimiSplit, float]:
    """Hermitian/antihermitian split of ``h`` and the eigenvalue entropy of ``h``."""
    split = husimi_split(h, solver)
    return split, eigen_entropy(split.lam)


def mutual_correlation(h, tol: Tolerances = TOLERANCES) -> float:
    """``E[Q] + E[R] - E[h]``, the mutual information between the two labels."""
    q, r = marginals(h, tol)
    return shannon_entropy(q, tol) + shannon_entropy(r, tol) - shannon_entropy(h, tol)
