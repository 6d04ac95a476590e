"""Discrete phase-space quasiprobabilities and LMG tunneling dynamics."""

__version__ = "0.1.0"

from . import dynamics, errors, linalg, lmg, phasespace, schwinger
from .config import TOLERANCES, Tolerances
from .dynamics import (
    GapEstimate,
    ScalarSeries,
    TimeGrid,
    angle_masses,
    estimate_gap,
    evolve,
    husimi_snapshots,
    series,
)
from .errors import (
    PhaseSpaceError,
    NotHermitian,
    NoConvergence,
    DimensionMismatch,
    EvenDimension,
    NonPositiveNome,
    ZeroWeight,
    NotNormalized,
    NegativeMass,
    InvalidParams,
    IndexOutOfRange,
    TooFewPeaks,
)
from .linalg import eig_general, eig_hermitian
from .lmg import (
    LMGParams,
    LMGSpectrum,
    barrier_report,
    build_hamiltonian,
    initial_state,
    potential,
    inverse_mass,
    potential_profile,
    spectrum,
)
from .phasespace import (
    PhaseSpaceGrid,
    characteristic_function,
    eigen_entropy,
    husimi_prob,
    husimi_split,
    husimi_split_and_eigenentropy,
    joint_entropy,
    marginals,
    mutual_correlation,
    quasiprob,
    shannon_entropy,
    wigner,
)
from .schwinger import KernelTable, build_kernels, build_schwinger_pair, mapping_weight, theta

__all__ = [
    "__version__",
    "dynamics",
    "errors",
    "linalg",
    "lmg",
    "phasespace",
    "schwinger",
    "DimensionMismatch",
    "EvenDimension",
    "GapEstimate",
    "IndexOutOfRange",
    "InvalidParams",
    "KernelTable",
    "LMGParams",
    "LMGSpectrum",
    "NegativeMass",
    "NoConvergence",
    "NonPositiveNome",
    "NotHermitian",
    "NotNormalized",
    "PhaseSpaceError",
    "PhaseSpaceGrid",
    "ScalarSeries",
    "TOLERANCES",
    "TimeGrid",
    "Tolerances",
    "TooFewPeaks",
    "ZeroWeight",
    "angle_masses",
    "barrier_report",
    "build_hamiltonian",
    "build_kernels",
    "build_schwinger_pair",
    "characteristic_function",
    "eig_general",
    "eig_hermitian",
    "eigen_entropy",
    "estimate_gap",
    "evolve",
    "husimi_prob",
    "husimi_snapshots",
    "husimi_split",
    "husimi_split_and_eigenentropy",
    "initial_state",
    "inverse_mass",
    "joint_entropy",
    "mapping_weight",
    "marginals",
    "mutual_correlation",
    "potential",
    "potential_profile",
    "quasiprob",
    "series",
    "shannon_entropy",
    "spectrum",
    "theta",
    "wigner",
]
