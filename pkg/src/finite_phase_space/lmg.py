"""Lipkin-Meshkov-Glick model in the ground-state quasi-spin multiplet.

The dimensionless Hamiltonian is ``H_L = J_z + chi / (2 Np) (J_+^2 + J_-^2)``
in the ``J_z`` basis ``m = -j, ..., j`` with ``j = Np / 2`` (so ``N = Np + 1``
and the basis order matches the phase-space labels).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .config import TOLERANCES, Tolerances
from .errors import IndexOutOfRange, InvalidParams
from .linalg import eig_hermitian

__all__ = [
    "LMGParams",
    "LMGSpectrum",
    "AngleProfile",
    "BarrierReport",
    "raising_squared",
    "build_hamiltonian",
    "spectrum",
    "parity_operator",
    "check_parity",
    "superposition",
    "initial_state",
    "potential",
    "inverse_mass",
    "well_angle",
    "potential_profile",
    "barrier_report",
]


@dataclass(frozen=True)
class LMGParams:
    np: int
    chi: float

    def __post_init__(self):
        if isinstance(self.np, bool) or int(self.np) != self.np:
            raise InvalidParams("Np must be an integer")
        if self.np < 2 or self.np % 2:
            raise InvalidParams("Np must be even")
        if not np.isfinite(self.chi):
            raise InvalidParams("chi must be finite")

    @property
    def dim(self) -> int:
        return self.np + 1

    @property
    def j(self) -> float:
        return self.np / 2

    @property
    def m(self) -> np.ndarray:
        return np.arange(-self.np // 2, self.np // 2 + 1)


def raising_squared(j: float) -> np.ndarray:
    """Matrix of ``J_+^2`` in the basis ``m = -j..j``."""
    m = np.arange(-j, j + 1)
    n = m.size
    out = np.zeros((n, n))
    for i, mm in enumerate(m[:-2]):
        out[i + 2, i] = np.sqrt((j - mm) * (j + mm + 1)) * np.sqrt((j - mm - 1) * (j + mm + 2))
    return out


def build_hamiltonian(params: LMGParams) -> np.ndarray:
    """Real symmetric ``H_L`` of dimension ``Np + 1``."""
    if not isinstance(params, LMGParams):
        raise InvalidParams("expected LMGParams")
    jp2 = raising_squared(params.j)
    return np.diag(params.m.astype(float)) + params.chi / (2 * params.np) * (jp2 + jp2.T)


def _fix_phase(v: np.ndarray, rel: float = 1e-8) -> np.ndarray:
    # lowest-m component with non-negligible weight is made real and positive
    k = int(np.argmax(np.abs(v) > rel * np.max(np.abs(v))))
    return v * (np.abs(v[k]) / v[k])


@dataclass(frozen=True)
class LMGSpectrum:
    """Ascending spectrum with real eigenvectors and parity labels.

    Column ``k`` of ``vectors`` is ``|E_k>`` in the ``J_z`` basis, with the
    phase fixed so that its lowest-``m`` nonzero component is positive.
    ``parity[k]`` is the eigenvalue of ``exp(i pi J_z)``.
    """

    values: np.ndarray
    vectors: np.ndarray
    parity: np.ndarray
    params: LMGParams | None = None

    @property
    def dim(self) -> int:
        return self.values.size

    @property
    def gap(self) -> float:
        return float(self.values[1] - self.values[0])

    def mirror_defect(self) -> float:
        return float(np.max(np.abs(self.values + self.values[::-1])))

    def parity_purity_defect(self) -> float:
        """Largest weight any eigenvector puts on the wrong parity sector."""
        m = np.arange(self.dim) - (self.dim - 1) // 2
        even = (m % 2 == 0)
        worst = 0.0
        for k in range(self.dim):
            v = self.vectors[:, k]
            wrong = v[~even] if self.parity[k] == 1 else v[even]
            worst = max(worst, float(np.linalg.norm(wrong)))
        return worst

    def to_dict(self) -> dict:
        out = {"energies": self.values.tolist(), "parities": self.parity.astype(int).tolist(),
               "gap": self.gap}
        if self.params is not None:
            out = {"np": self.params.np, "chi": self.params.chi, **out}
        return out


def spectrum(h, params: LMGParams | None = None, method: str = "lapack",
             tol: Tolerances = TOLERANCES) -> LMGSpectrum:
    """Diagonalize ``H_L`` (a matrix or :class:`LMGParams`).

    The even-m and odd-m parity blocks are diagonalized separately, so
    eigenvectors are exactly parity-pure even where the two blocks have
    (near-)degenerate levels.
    """
    if isinstance(h, LMGParams):
        params, h = h, build_hamiltonian(h)
    h = np.asarray(h)
    n = h.shape[0]
    m = np.arange(n) - (n - 1) // 2
    values, vectors, parity = [], [], []
    for sign, sector in ((1, m % 2 == 0), (-1, m % 2 != 0)):
        idx = np.flatnonzero(sector)
        if idx.size == 0:
            continue
        dec = eig_hermitian(h[np.ix_(idx, idx)], method=method, tol=tol)
        for k in range(idx.size):
            full = np.zeros(n, dtype=complex)
            full[idx] = dec.vectors[:, k]
            values.append(dec.values[k])
            vectors.append(_fix_phase(full).real)
            parity.append(sign)
    order = np.argsort(values, kind="stable")
    return LMGSpectrum(np.asarray(values)[order], np.column_stack(vectors)[:, order],
                       np.asarray(parity)[order], params)


def parity_operator(n: int) -> np.ndarray:
    """``exp(i pi J_z)`` for the ``n``-dimensional multiplet (``n`` odd)."""
    if n % 2 == 0:
        raise InvalidParams("dimension must be odd")
    m = np.arange(n) - (n - 1) // 2
    return np.diag(np.where(m % 2 == 0, 1.0, -1.0)).astype(complex)


def check_parity(h, tol: Tolerances = TOLERANCES) -> bool:
    h = np.asarray(h)
    p = parity_operator(h.shape[0])
    return bool(np.max(np.abs(h @ p - p @ h)) <= tol.commutator)


def superposition(spec: LMGSpectrum, i: int = 0, j: int = 1, phase: float = 0.0) -> np.ndarray:
    """``(|E_i> + e^{i phase} |E_j>) / sqrt(2)``."""
    if not (0 <= i < j < spec.dim):
        raise IndexOutOfRange(f"need 0 <= i < j < {spec.dim}, got i={i}, j={j}")
    return (spec.vectors[:, i] + np.exp(1j * phase) * spec.vectors[:, j]) / np.sqrt(2)


def initial_state(spec: LMGSpectrum, i: int = 0, j: int = 1, phase: float = 0.0) -> np.ndarray:
    """Density matrix of :func:`superposition`."""
    psi = superposition(spec, i, j, phase)
    rho = np.outer(psi, psi.conj())
    return (rho + rho.conj().T) / 2


def potential(phi, params: LMGParams):
    """Angle-based potential ``V(phi)`` in units of epsilon."""
    npart, chi = params.np, params.chi
    phi = np.asarray(phi, dtype=float)
    return -(npart + 1) / 2 * (np.cos(phi) + chi / 2 * (npart + 3) / (npart + 1) * np.sin(phi) ** 2)


def inverse_mass(phi, params: LMGParams):
    """Inverse effective mass ``M^-1(phi)``."""
    npart, chi = params.np, params.chi
    phi = np.asarray(phi, dtype=float)
    return 2 / (npart - 1) * (np.cos(phi) + chi * (1 + np.sin(phi) ** 2))


def well_angle(params: LMGParams) -> float:
    """Positive angle of the potential minimum, 0 when there is a single well."""
    if params.chi <= 0:
        return 0.0
    c = (params.np + 1) / (params.chi * (params.np + 3))
    return float(np.arccos(c)) if c < 1 else 0.0


@dataclass(frozen=True)
class AngleProfile:
    phi: np.ndarray
    V: np.ndarray
    Minv: np.ndarray
    params: LMGParams | None = None


def potential_profile(params: LMGParams, samples: int = 721) -> AngleProfile:
    """Sample ``V`` and ``M^-1`` uniformly on ``[-pi, pi]`` including both ends."""
    if samples < 3:
        raise InvalidParams("need at least 3 samples")
    phi = np.linspace(-np.pi, np.pi, int(samples))
    return AngleProfile(phi, potential(phi, params), inverse_mass(phi, params), params)


@dataclass(frozen=True)
class BarrierReport:
    barrier_height: float
    well_depth: float
    well_angle: float
    levels_below_barrier: list = field(default_factory=list)
    energies_below_barrier: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "barrier_height": self.barrier_height,
            "well_depth": self.well_depth,
            "well_angle": self.well_angle,
            "levels_below_barrier": list(self.levels_below_barrier),
            "energies_below_barrier": list(self.energies_below_barrier),
        }


def barrier_report(profile: AngleProfile, spec: LMGSpectrum) -> BarrierReport:
    """Locate the central barrier ``V(0)`` and list the levels trapped beneath it.

    ``barrier_height`` and ``well_depth`` are potential values (``V(0)`` and the
    minimum of ``V``).  With no interior barrier the level list is empty.
    """
    params = profile.params if profile.params is not None else spec.params
    v0 = float(potential(0.0, params)) if params is not None else float(np.interp(0.0, profile.phi, profile.V))
    vmin = float(np.min(profile.V))
    phi_star = 0.0
    if params is not None:
        phi_star = well_angle(params)
        vmin = min(vmin, float(potential(phi_star, params)))
    if v0 - vmin <= 1e-12:
        return BarrierReport(v0, vmin, phi_star, [], [])
    below = [k for k, e in enumerate(spec.values) if vmin <= e < v0]
    return BarrierReport(v0, vmin, phi_star, below, [float(spec.values[k]) for k in below])
