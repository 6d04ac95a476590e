"""Cross-module invariant suite behind ``fps-lmg validate``."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import PhaseSpaceError
from .lmg import LMGParams, build_hamiltonian, check_parity, spectrum
from .phasespace import husimi_prob, mutual_correlation, quasiprob
from .schwinger import build_kernels, build_schwinger_pair, kernel_invariants, kernel_invariants_pass


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


def random_density(n: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    """Random density matrix from a complex Ginibre matrix of the given rank."""
    rank = n if rank is None else rank
    g = rng.normal(size=(n, rank)) + 1j * rng.normal(size=(n, rank))
    rho = g @ g.conj().T
    rho = (rho + rho.conj().T) / 2
    return rho / np.trace(rho).real


def _weyl_checks(n: int) -> list[Check]:
    pair = build_schwinger_pair(n)
    u, v = pair.U, pair.V
    w = np.exp(2j * np.pi / n)
    weyl = float(np.max(np.abs(v @ u - w * u @ v)))
    eye = np.eye(n)
    period = max(float(np.max(np.abs(np.linalg.matrix_power(u, n) - eye))),
                 float(np.max(np.abs(np.linalg.matrix_power(v, n) - eye))))
    return [Check(f"N={n} Weyl relation VU = wUV", weyl <= 1e-12, f"{weyl:.2e}"),
            Check(f"N={n} U^N = V^N = Id", period <= 1e-12, f"{period:.2e}")]


def _kernel_checks(n: int, convention: str) -> list[Check]:
    inv = kernel_invariants(build_kernels(n, convention=convention))
    detail = {
        "trace(T^s) = 1": f"{inv['trace']:.2e}",
        "sum T^s = N Id": f"{inv['sum']:.2e}",
        "T^0 Hermitian": f"{inv.get('hermitian_T0', float('nan')):.2e}",
        "T^-1 PSD": f"min eig {inv.get('min_eig_Tm1', float('nan')):.2e}",
        "eig(T^-1) in [0, 1]": f"max eig {inv.get('max_eig_Tm1', float('nan')):.6f}",
    }
    return [Check(f"N={n} {name}", ok, detail[name]) for name, ok in kernel_invariants_pass(inv).items()]


def _state_checks(n: int, samples: int, rng: np.random.Generator, convention: str) -> list[Check]:
    k = build_kernels(n, convention=convention)
    worst = {"sum": 0.0, "range": 0.0, "smoothing": 0.0, "fourier": 0.0, "mi": np.inf}
    for i in range(samples):
        rho = random_density(n, rng, rank=1 + i % n)
        h = husimi_prob(rho, k).values
        worst["sum"] = max(worst["sum"], abs(h.sum() - 1))
        worst["range"] = max(worst["range"], max(-h.min(), h.max() - 1, 0.0))
        worst["smoothing"] = max(worst["smoothing"], float(np.max(np.abs(h - husimi_prob(rho, k, "smoothing").values))))
        for s in (-1, 0, 1):
            d = np.max(np.abs(quasiprob(rho, s, k).values - quasiprob(rho, s, k, "fourier").values))
            worst["fourier"] = max(worst["fourier"], float(d))
        try:
            worst["mi"] = min(worst["mi"], mutual_correlation(h))
        except PhaseSpaceError:
            worst["mi"] = -np.inf
    return [
        Check(f"N={n} Husimi sums to 1", worst["sum"] <= 1e-10, f"{worst['sum']:.2e}"),
        Check(f"N={n} Husimi in [0, 1]", worst["range"] <= 1e-10, f"{worst['range']:.2e}"),
        Check(f"N={n} smoothing path = direct path", worst["smoothing"] <= 1e-10, f"{worst['smoothing']:.2e}"),
        Check(f"N={n} trace path = Fourier path", worst["fourier"] <= 1e-10, f"{worst['fourier']:.2e}"),
        Check(f"N={n} mutual correlation >= 0", worst["mi"] >= -1e-10, f"min {worst['mi']:.3e}"),
    ]


def _lmg_checks(rng: np.random.Generator) -> list[Check]:
    out = []
    worst = 0.0
    for _ in range(5):
        p = LMGParams(int(rng.integers(1, 16)) * 2, float(rng.uniform(0, 3)))
        worst = max(worst, spectrum(p).mirror_defect())
    out.append(Check("LMG mirror symmetry E_k = -E_{N-1-k}", worst <= 1e-9, f"{worst:.2e}"))
    p = LMGParams(20, 1.5)
    h = build_hamiltonian(p)
    out.append(Check("LMG [H, parity] = 0", check_parity(h), "Np=20 chi=1.5"))
    purity = spectrum(p).parity_purity_defect()
    out.append(Check("LMG parity-pure eigenvectors", purity <= 1e-10, f"{purity:.2e}"))
    err = 0.0
    for chi in (0.0, 0.5, 1.0, 2.0):
        e = spectrum(LMGParams(2, chi)).values
        r = np.sqrt(1 + chi * chi / 4)
        err = max(err, float(np.max(np.abs(e - [-r, 0.0, r]))))
    out.append(Check("LMG Np=2 closed form", err <= 1e-10, f"{err:.2e}"))
    return out


def run_checks(seed: int = 0, dims=(3, 5, 7, 21), samples: int = 20, convention: str = "2pi") -> list[Check]:
    rng = np.random.default_rng(seed)
    checks = []
    for n in dims:
        checks += _weyl_checks(n)
        checks += _kernel_checks(n, convention)
    for n in dims:
        if n <= 7:
            checks += _state_checks(n, samples, rng, convention)
    checks += _lmg_checks(rng)
    return checks


def format_report(checks: list[Check]) -> str:
    width = max(len(c.name) for c in checks)
    lines = [f"{'check'.ljust(width)}  result  detail"]
    for c in checks:
        lines.append(f"{c.name.ljust(width)}  {'PASS' if c.passed else 'FAIL'}    {c.detail}")
    failed = sum(not c.passed for c in checks)
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n"
