"""Schwinger operator basis, theta-function weights and mapping kernels.

Phase-space labels run over the symmetric interval ``[-l, l]`` with
``l = (N - 1) / 2`` and are congruent modulo ``N``; ``N`` must be odd.  Array
axes indexed by a label use offset ``label + l``.

The shift pair satisfies ``V U = exp(2 pi i / N) U V`` with ``U`` diagonal in
the ``J_z`` basis, so the first phase-space label reads as the angular
momentum ``m`` and the second as the conjugate angle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import numpy as np

from .config import TOLERANCES
from .errors import EvenDimension, IndexOutOfRange, NonPositiveNome, ZeroWeight

__all__ = [
    "THETA_CONVENTIONS",
    "half_width",
    "labels",
    "recenter",
    "SchwingerPair",
    "build_schwinger_pair",
    "theta",
    "theta_terms",
    "ThetaWeight",
    "mapping_weight",
    "build_S",
    "build_S_s",
    "build_T_s",
    "KernelTable",
    "build_kernels",
    "smoothing_kernel",
    "kernel_invariants",
    "kernel_invariants_pass",
    "select_theta_convention",
    "dump_kernels",
]

THETA_CONVENTIONS = ("2pi", "2")
TESTED_S = (-1, 0, 1)


def _check_odd(n: int) -> int:
    n = int(n)
    if n < 1 or n % 2 == 0:
        raise EvenDimension(f"dimension must be odd and positive, got {n}")
    return n


def half_width(n: int) -> int:
    return (_check_odd(n) - 1) // 2


def labels(n: int) -> np.ndarray:
    """Integer labels ``-l, ..., l`` in ascending order."""
    ell = half_width(n)
    return np.arange(-ell, ell + 1)


def recenter(k, n: int):
    """Map an integer (or array) onto its representative in ``[-l, l]`` mod ``n``."""
    ell = half_width(n)
    return (np.asarray(k) + ell) % n - ell if np.ndim(k) else int((k + ell) % n - ell)


def _root_of_unity(k, n: int) -> np.ndarray:
    # exp(2 pi i k / n) with the integer k reduced first, keeping the argument small
    return np.exp(2j * np.pi * (np.asarray(k) % n) / n)


def _sym_phase(eta: int, xi: int, n: int) -> complex:
    # exp(i pi eta xi / n), periodic in eta*xi modulo 2n
    return complex(np.exp(1j * np.pi * ((eta * xi) % (2 * n)) / n))


def _check_label(k: int, n: int) -> int:
    ell = (n - 1) // 2
    if not -ell <= k <= ell:
        raise IndexOutOfRange(f"label {k} outside [{-ell}, {ell}]")
    return k + ell


@dataclass(frozen=True)
class SchwingerPair:
    U: np.ndarray
    V: np.ndarray
    dim: int

    def U_power(self, k: int) -> np.ndarray:
        return np.diag(_root_of_unity(int(k) * labels(self.dim), self.dim))

    def V_power(self, k: int) -> np.ndarray:
        # V|m> = |m - 1>, so V^k moves every basis vector k steps down
        return np.roll(np.eye(self.dim, dtype=complex), -int(k), axis=0)


def build_schwinger_pair(n: int) -> SchwingerPair:
    """Unitary pair with ``U|m> = e^{2 pi i m/N}|m>`` and ``V|m> = |m-1>``."""
    n = _check_odd(n)
    if n < 3:
        raise EvenDimension("N must be at least 3")
    m = labels(n)
    u = np.diag(_root_of_unity(m, n))
    v = np.roll(np.eye(n, dtype=complex), -1, axis=0)
    for a in (u, v):
        a.setflags(write=False)
    return SchwingerPair(u, v, n)


def _truncation(a: float) -> int:
    return int(np.ceil(np.sqrt(40.0 / (np.pi * a))))


def theta_terms(kind: int, z: float, a: float, convention: str = "2pi") -> np.ndarray:
    """Individual series terms ``n = -nmax..nmax`` of theta_3 or theta_4 at ``tau = i a``."""
    if a <= 0:
        raise NonPositiveNome(f"nome parameter must be positive, got {a}")
    if kind not in (3, 4):
        raise ValueError("kind must be 3 or 4")
    nmax = _truncation(a)
    n = np.arange(-nmax, nmax + 1)
    freq = 2.0 * np.pi if convention == "2pi" else 2.0
    if convention not in THETA_CONVENTIONS:
        raise ValueError(f"unknown theta convention {convention!r}")
    terms = np.exp(-np.pi * a * n * n) * np.cos(freq * n * z)
    if kind == 4:
        terms = terms * np.where(n % 2 == 0, 1.0, -1.0)
    return terms


def theta(kind: int, z: float, a: float, convention: str = "2pi") -> float:
    """Jacobi theta function ``theta_kind(z | i a)``.

    With the default convention ``theta_3(z|ia) = sum_n exp(-pi a n^2 + 2 pi i n z)``
    and ``theta_4`` carries an extra ``(-1)^n``.  The ``"2"`` convention uses
    ``2 i n z`` in the exponent.  The series is symmetric in ``n`` and hence real;
    terms beyond ``|n| = ceil(sqrt(40 / (pi a)))`` are below ``1e-17``.
    """
    return float(np.sum(theta_terms(kind, z, a, convention)))


@dataclass(frozen=True)
class ThetaWeight:
    a: float
    M: np.ndarray
    K: np.ndarray
    convention: str = "2pi"


def mapping_weight(n: int, convention: str = "2pi") -> ThetaWeight:
    """Tabulate the theta-product weight ``M(eta, xi)`` and ``K = M / M(0, 0)``."""
    n = _check_odd(n)
    a = 1.0 / (2 * n)
    lab = labels(n)
    t3 = np.array([theta(3, a * k, a, convention) for k in lab])
    t4 = np.array([theta(4, a * k, a, convention) for k in lab])
    eta = lab[:, None]
    xi = lab[None, :]
    m = (np.sqrt(a) / 2) * (
        t3[:, None] * (t3[None, :] + t4[None, :] * np.exp(1j * np.pi * eta))
        + t4[:, None] * (t3[None, :] * np.exp(1j * np.pi * xi)
                         + t4[None, :] * np.exp(1j * np.pi * (eta + xi + n)))
    )
    if np.max(np.abs(m.imag)) > 1e-12:
        raise ArithmeticError("theta weight has a non-negligible imaginary part")
    m = m.real
    ell = (n - 1) // 2
    k = m / m[ell, ell]
    k[ell, ell] = 1.0
    for arr in (m, k):
        arr.setflags(write=False)
    return ThetaWeight(a, m, k, convention)


def build_S(eta: int, xi: int, pair: SchwingerPair) -> np.ndarray:
    """Symmetrized Schwinger operator ``N^{-1/2} e^{i pi eta xi / N} U^eta V^xi``."""
    n = pair.dim
    _check_label(eta, n)
    _check_label(xi, n)
    return _sym_phase(eta, xi, n) * (pair.U_power(eta) @ pair.V_power(xi)) / np.sqrt(n)


def _weight_power(kval: float, s: complex) -> complex:
    if kval == 0.0:
        if np.real(s) > 0:
            raise ZeroWeight("K(eta, xi) = 0 with Re(s) > 0")
        return 0.0 if np.real(s) < 0 or s != 0 else 1.0
    return complex(kval) ** (-s)


def build_S_s(s: complex, eta: int, xi: int, pair: SchwingerPair, weight: ThetaWeight) -> np.ndarray:
    """Extended mapping kernel ``K(eta, xi)^{-s} S(eta, xi)``."""
    ell = (pair.dim - 1) // 2
    base = build_S(eta, xi, pair)
    return _weight_power(weight.K[eta + ell, xi + ell], s) * base


def build_T_s(s: complex, mu: int, nu: int, pair: SchwingerPair, weight: ThetaWeight) -> np.ndarray:
    """Operator basis element ``T^(s)(mu, nu)`` as a double DFT of ``S^(s)``."""
    n = pair.dim
    _check_label(mu, n)
    _check_label(nu, n)
    out = np.zeros((n, n), dtype=complex)
    for eta in labels(n):
        for xi in labels(n):
            phase = _root_of_unity(-(eta * mu + xi * nu), n)
            out += phase * build_S_s(s, eta, xi, pair, weight)
    return out / np.sqrt(n)


def _fourier_matrix(n: int) -> np.ndarray:
    lab = labels(n)
    return _root_of_unity(-np.outer(lab, lab), n)


@dataclass(frozen=True, eq=False)
class KernelTable:
    """Precomputed kernels for one dimension and a set of ``s`` values.

    ``S[s]`` and ``T[s]`` have shape ``(N, N, N, N)``: the first two axes are
    the phase-space labels (offset by ``l``), the last two the matrix indices.
    ``E`` is the smoothing kernel ``E[mu, nu, mu', nu']``, present whenever
    both ``s = 0`` and ``s = -1`` are tabulated.
    """

    dim: int
    s_values: tuple
    pair: SchwingerPair
    weight: ThetaWeight
    S: dict
    T: dict
    E: np.ndarray | None = None
    untested: bool = False
    metadata: dict = field(default_factory=dict)

    @property
    def labels(self) -> np.ndarray:
        return labels(self.dim)

    def index(self, k: int) -> int:
        return int(recenter(k, self.dim)) + (self.dim - 1) // 2

    def T_at(self, s, mu: int, nu: int) -> np.ndarray:
        """``T^(s)(mu, nu)`` for any integer labels, reduced modulo ``N``."""
        return self.T[s][self.index(mu), self.index(nu)]

    def S_at(self, s, eta: int, xi: int) -> np.ndarray:
        return self.S[s][self.index(eta), self.index(xi)]


def _s_table(s, pair: SchwingerPair, weight: ThetaWeight) -> np.ndarray:
    n = pair.dim
    lab = labels(n)
    base = np.empty((n, n, n, n), dtype=complex)
    for i, eta in enumerate(lab):
        ueta = pair.U_power(eta)
        for j, xi in enumerate(lab):
            scale = _weight_power(weight.K[i, j], s)
            base[i, j] = scale * _sym_phase(eta, xi, n) * (ueta @ pair.V_power(xi))
    return base / np.sqrt(n)


def _t_from_s(s_table: np.ndarray) -> np.ndarray:
    # extended precision: for s = +1 the weights K^-1 reach ~1e6 at N = 21 and the
    # transform must cancel them down to O(1)
    n = s_table.shape[0]
    arg = ((-np.outer(labels(n), labels(n))) % n).astype(np.longdouble)
    angle = 2 * np.longdouble(np.pi) * arg / n
    f = (np.cos(angle) + 1j * np.sin(angle)).astype(np.clongdouble)
    t = np.einsum("ae,exij->axij", f, s_table.astype(np.clongdouble))
    t = np.einsum("bx,axij->abij", f, t)
    return (t / np.sqrt(np.longdouble(n))).astype(complex)


def smoothing_kernel(table: KernelTable) -> np.ndarray:
    """``E(mu, nu | mu', nu') = Tr[T^(0)(mu, nu) T^(-1)(mu', nu')]`` as a real array."""
    t0, tm = table.T[0], table.T[-1]
    e = np.einsum("abij,cdji->abcd", t0, tm, optimize=True)
    if np.max(np.abs(e.imag)) > TOLERANCES.kernel:
        raise ArithmeticError("smoothing kernel is not real")
    return e.real


@lru_cache(maxsize=32)
def _cached_kernels(n: int, s_values: tuple, convention: str) -> KernelTable:
    pair = build_schwinger_pair(n)
    weight = mapping_weight(n, convention)
    s_tab, t_tab = {}, {}
    for s in s_values:
        s_tab[s] = _s_table(s, pair, weight)
        t_tab[s] = _t_from_s(s_tab[s])
        s_tab[s].setflags(write=False)
        t_tab[s].setflags(write=False)
    untested = any(s not in TESTED_S for s in s_values)
    table = KernelTable(n, s_values, pair, weight, s_tab, t_tab, None, untested,
                        {"theta_convention": convention, "untested_region": untested})
    if 0 in s_values and -1 in s_values:
        e = smoothing_kernel(table)
        e.setflags(write=False)
        object.__setattr__(table, "E", e)
    return table


def build_kernels(n: int, s_values: Iterable = TESTED_S, convention: str = "2pi") -> KernelTable:
    """Build (or fetch from cache) the kernel table for dimension ``n``.

    Values of ``s`` outside ``{-1, 0, 1}`` are accepted (``|s| <= 1``) and flag
    the table as ``untested``.
    """
    n = _check_odd(n)
    if n < 3:
        raise EvenDimension("N must be at least 3")
    key = []
    for s in s_values:
        if abs(s) > 1:
            raise ValueError(f"|s| must not exceed 1, got {s}")
        s = int(s.real) if np.imag(s) == 0 and float(np.real(s)).is_integer() else s
        key.append(s)
    return _cached_kernels(n, tuple(sorted(set(key), key=lambda v: (np.real(v), np.imag(v)))), convention)


def kernel_invariants(table: KernelTable) -> dict:
    """Measure the defects that pin the construction.

    Returns the worst-case deviation for: unit trace of every ``T^(s)``,
    Hermiticity of ``T^(0)``, the smallest eigenvalue of ``T^(-1)``, the largest
    eigenvalue of ``T^(-1)`` and ``sum_{mu nu} T^(s) = N Id``.
    """
    n = table.dim
    out = {}
    eye = np.eye(n)
    trace_err = 0.0
    sum_err = 0.0
    for s, t in table.T.items():
        tr = np.einsum("abii->ab", t)
        trace_err = max(trace_err, float(np.max(np.abs(tr - 1))))
        total = t.astype(np.clongdouble).sum(axis=(0, 1))
        sum_err = max(sum_err, float(np.max(np.abs(total - n * eye))))
    out["trace"] = trace_err
    out["sum"] = sum_err
    if 0 in table.T:
        t0 = table.T[0]
        out["hermitian_T0"] = float(np.max(np.abs(t0 - np.conj(np.swapaxes(t0, 2, 3)))))
    if -1 in table.T:
        tm = table.T[-1].reshape(n * n, n, n)
        herm = float(np.max(np.abs(tm - np.conj(np.swapaxes(tm, 1, 2)))))
        w = np.linalg.eigvalsh((tm + np.conj(np.swapaxes(tm, 1, 2))) / 2)
        out["hermitian_Tm1"] = herm
        out["min_eig_Tm1"] = float(w.min())
        out["max_eig_Tm1"] = float(w.max())
    return out


def kernel_invariants_pass(inv: dict, tol: float = TOLERANCES.kernel, sum_tol: float = TOLERANCES.kernel_sum) -> dict:
    checks = {
        "trace(T^s) = 1": inv["trace"] <= tol,
        "sum T^s = N Id": inv["sum"] <= sum_tol,
    }
    if "hermitian_T0" in inv:
        checks["T^0 Hermitian"] = inv["hermitian_T0"] <= tol
    if "min_eig_Tm1" in inv:
        checks["T^-1 PSD"] = inv["hermitian_Tm1"] <= tol and inv["min_eig_Tm1"] >= -tol
        checks["eig(T^-1) in [0, 1]"] = inv["max_eig_Tm1"] <= 1 + tol
    return checks


def select_theta_convention(n: int = 5) -> str:
    """Return the unique theta convention whose kernels pass every invariant."""
    passing = [c for c in THETA_CONVENTIONS
               if all(kernel_invariants_pass(kernel_invariants(build_kernels(n, convention=c))).values())]
    if len(passing) != 1:
        raise ArithmeticError(f"expected exactly one valid theta convention, got {passing}")
    return passing[0]


def dump_kernels(table: KernelTable, path) -> None:
    """Write ``s mu nu row col re im`` lines (row/col are 0-based matrix indices)."""
    lab = table.labels
    n = table.dim
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for s in table.s_values:
            t = table.T[s]
            for a, mu in enumerate(lab):
                for b, nu in enumerate(lab):
                    for r in range(n):
                        for c in range(n):
                            z = t[a, b, r, c]
                            fh.write(f"{s} {mu} {nu} {r} {c} {z.real:.17g} {z.imag:.17g}\n")
