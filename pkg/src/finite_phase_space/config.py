"""Numerical tolerances read by every module.

A single module-level :data:`TOLERANCES` record holds the defaults; pass a
modified copy (``dataclasses.replace``) to functions that accept ``tol=`` to
override them locally.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    hermitian_input: float = 1e-12
    # residual bound is relative to ||M||_F
    eig_residual: float = 1e-10
    eig_imag: float = 1e-12
    orthonormal: float = 1e-10
    trace_sum: float = 1e-9
    density_trace: float = 1e-12
    density_psd: float = 1e-10
    kernel: float = 1e-10
    kernel_sum: float = 1e-9
    normalization: float = 1e-8
    clamp_negative: float = 1e-12
    negative_mass: float = 1e-8
    commutator: float = 1e-12
    max_sweeps: int = 100
    max_qr_iterations: int = 10000
    # fraction of one-sided angle mass that counts as "localized"
    localization_threshold: float = 0.8


TOLERANCES = Tolerances()
