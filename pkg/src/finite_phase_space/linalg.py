"""Dense complex matrix arithmetic and eigensolvers.

Matrices are plain two-dimensional :class:`numpy.ndarray` objects.  The
production eigensolvers delegate to LAPACK through :mod:`numpy.linalg` and
enforce residual contracts on the result.  Two self-contained solvers,
:func:`jacobi_eigh` (cyclic Jacobi rotations) and :func:`qr_eigvals`
(Householder-Hessenberg reduction followed by Wilkinson-shifted QR), provide
an independent route used for cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import TOLERANCES, Tolerances
from .errors import DimensionMismatch, NoConvergence, NotHermitian

__all__ = [
    "EigenDecomposition",
    "as_matrix",
    "multiply",
    "adjoint",
    "trace",
    "trace_product",
    "frobenius",
    "hermiticity_defect",
    "eig_hermitian",
    "eig_general",
    "jacobi_eigh",
    "qr_eigvals",
    "hessenberg",
]

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class EigenDecomposition:
    values: np.ndarray
    vectors: np.ndarray
    residual: float

    def __iter__(self):
        # allows ``w, v = eig_hermitian(m)``
        yield self.values
        yield self.vectors


def as_matrix(m) -> np.ndarray:
    """Return ``m`` as a square complex array, validating shape and finiteness."""
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise DimensionMismatch(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a.astype(complex, copy=False)


def _conformable(a: np.ndarray, b: np.ndarray) -> None:
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"shapes {a.shape} and {b.shape} are not conformable")


def multiply(a, b) -> np.ndarray:
    a, b = np.asarray(a), np.asarray(b)
    _conformable(a, b)
    return a @ b


def adjoint(a) -> np.ndarray:
    return np.asarray(a).conj().T


def trace(a) -> complex:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"trace of non-square shape {a.shape}")
    return complex(np.trace(a))


def trace_product(a, b) -> complex:
    """``Tr(A B) = sum_jk A_jk B_kj`` without forming the product."""
    a, b = np.asarray(a), np.asarray(b)
    if a.ndim != 2 or a.shape != b.T.shape:
        raise DimensionMismatch(f"Tr(AB) needs shapes (n,m) and (m,n), got {a.shape}, {b.shape}")
    return complex(np.sum(a * b.T))


def frobenius(a) -> float:
    return float(np.linalg.norm(np.asarray(a), "fro"))


def hermiticity_defect(a) -> float:
    a = np.asarray(a)
    return float(np.max(np.abs(a - a.conj().T)))


def _complex_order(w: np.ndarray) -> np.ndarray:
    # real parts equal to within rounding compare equal, so conjugate pairs
    # always come out as (-imag, +imag)
    scale = max(1.0, float(np.max(np.abs(w)))) if w.size else 1.0
    return np.lexsort((w.imag, np.round(w.real / scale, 10)))


def _residual(m: np.ndarray, values: np.ndarray, vectors: np.ndarray) -> float:
    r = m @ vectors - vectors * values[np.newaxis, :]
    return float(np.max(np.linalg.norm(r, axis=0)))


def eig_hermitian(m, method: str = "lapack", tol: Tolerances = TOLERANCES) -> EigenDecomposition:
    """Eigen-decomposition of a Hermitian matrix.

    Eigenvalues are real and ascending, eigenvectors are orthonormal columns.
    ``method="jacobi"`` uses :func:`jacobi_eigh` instead of LAPACK.

    Raises
    ------
    NotHermitian
        If ``max|M - M^H|`` exceeds the configured tolerance.
    NoConvergence
        If the solver fails or the residual contract is violated.
    """
    m = as_matrix(m)
    scale = max(1.0, float(np.max(np.abs(m))))
    if hermiticity_defect(m) > tol.hermitian_input * scale:
        raise NotHermitian(f"max|M - M^H| = {hermiticity_defect(m):.3e}")
    m = (m + m.conj().T) / 2
    if method == "lapack":
        try:
            w, v = np.linalg.eigh(m)
        except np.linalg.LinAlgError as exc:
            raise NoConvergence(str(exc)) from exc
    elif method == "jacobi":
        w, v = jacobi_eigh(m, tol=tol)
    else:
        raise ValueError(f"unknown method {method!r}")
    order = np.argsort(w, kind="stable")
    w, v = np.asarray(w, dtype=float)[order], v[:, order]
    res = _residual(m, w.astype(complex), v)
    if res > tol.eig_residual * frobenius(m):
        raise NoConvergence(f"residual {res:.3e} exceeds contract")
    return EigenDecomposition(w, v, res)


def eig_general(m, tol: Tolerances = TOLERANCES) -> EigenDecomposition:
    """Eigenvalues and unit eigenvectors of an arbitrary square matrix.

    The output is sorted by (real part, imaginary part).  The eigenvalue sum is
    checked against the trace.
    """
    m = as_matrix(m)
    try:
        w, v = np.linalg.eig(m)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    order = _complex_order(w)
    w, v = w[order], v[:, order]
    norm = frobenius(m)
    if abs(np.sum(w) - np.trace(m)) > tol.trace_sum * max(norm, _EPS):
        raise NoConvergence("eigenvalue sum does not reproduce the trace")
    res = _residual(m, w, v)
    if res > tol.eig_residual * norm:
        raise NoConvergence(f"residual {res:.3e} exceeds contract")
    return EigenDecomposition(w, v, res)


def jacobi_eigh(m, tol: Tolerances = TOLERANCES) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi diagonalization of a complex Hermitian matrix.

    Each rotation first removes the phase of the pivot ``A[p, q]`` and then
    applies the classical real rotation, so the pivot vanishes exactly.
    """
    a = np.array(m, dtype=complex)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    total = np.linalg.norm(a, "fro")
    for _ in range(tol.max_sweeps):
        # direct sum: subtracting the diagonal from the full norm cancels badly
        off = np.linalg.norm(a[~np.eye(n, dtype=bool)])
        if off <= _EPS * max(total, 1e-300):
            w = np.real(np.diag(a))
            order = np.argsort(w, kind="stable")
            return w[order], v[:, order]
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag < 1e-300:
                    continue
                phase = apq / mag
                app, aqq = a[p, p].real, a[q, q].real
                zeta = (aqq - app) / (2.0 * mag)
                t = (1.0 if zeta >= 0 else -1.0) / (abs(zeta) + np.sqrt(1.0 + zeta * zeta))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # G = diag(1, conj(phase)) @ [[c, s], [-s, c]]
                g = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ g
                a[idx, :] = g.conj().T @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                v[:, idx] = v[:, idx] @ g
    raise NoConvergence(f"Jacobi did not converge in {tol.max_sweeps} sweeps")


def hessenberg(m) -> np.ndarray:
    """Unitary similarity to upper Hessenberg form by Householder reflections."""
    a = np.array(m, dtype=complex)
    n = a.shape[0]
    for k in range(n - 2):
        x = a[k + 1:, k].copy()
        nx = np.linalg.norm(x)
        if nx == 0.0:
            continue
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        x[0] += phase * nx
        x /= np.linalg.norm(x)
        a[k + 1:, :] -= 2.0 * np.outer(x, x.conj() @ a[k + 1:, :])
        a[:, k + 1:] -= 2.0 * np.outer(a[:, k + 1:] @ x, x.conj())
        a[k + 2:, k] = 0.0
    return a


def qr_eigvals(m, tol: Tolerances = TOLERANCES) -> np.ndarray:
    """Eigenvalues by Hessenberg reduction and shifted QR with deflation.

    Self-contained counterpart of :func:`eig_general` used as an independent
    oracle.  Returns values sorted by (real part, imaginary part).
    """
    h = hessenberg(as_matrix(m))
    n = h.shape[0]
    out = []
    hi = n - 1
    iters = 0
    since_deflation = 0
    while hi >= 0:
        if hi == 0:
            out.append(h[0, 0])
            break
        lo = hi
        while lo > 0:
            scale = abs(h[lo, lo]) + abs(h[lo - 1, lo - 1])
            if abs(h[lo, lo - 1]) <= _EPS * (scale if scale > 0 else 1.0):
                h[lo, lo - 1] = 0.0
                break
            lo -= 1
        if lo == hi:
            out.append(h[hi, hi])
            hi -= 1
            since_deflation = 0
            continue
        iters += 1
        since_deflation += 1
        if iters > tol.max_qr_iterations:
            raise NoConvergence("shifted QR iteration cap exceeded")
        a, b, c, d = h[hi - 1, hi - 1], h[hi - 1, hi], h[hi, hi - 1], h[hi, hi]
        if since_deflation % 11 == 10:
            # exceptional shift breaks cycles
            mu = d + abs(c) * (1 + 0.5j)
        else:
            half = (a + d) / 2
            disc = np.sqrt(half * half - (a * d - b * c))
            mu1, mu2 = half + disc, half - disc
            mu = mu1 if abs(mu1 - d) < abs(mu2 - d) else mu2
        blk = slice(lo, hi + 1)
        sub = h[blk, blk] - mu * np.eye(hi - lo + 1)
        rots = []
        size = hi - lo + 1
        for k in range(size - 1):
            x, y = sub[k, k], sub[k + 1, k]
            r = np.hypot(abs(x), abs(y))
            if r == 0.0:
                q = np.eye(2, dtype=complex)
            else:
                q = np.array([[x, -np.conj(y)], [y, np.conj(x)]]) / r
            sub[k:k + 2, :] = q.conj().T @ sub[k:k + 2, :]
            rots.append(q)
        for k, q in enumerate(rots):
            sub[:, k:k + 2] = sub[:, k:k + 2] @ q
        h[blk, blk] = sub + mu * np.eye(size)
    w = np.array(out, dtype=complex)
    return w[_complex_order(w)]
