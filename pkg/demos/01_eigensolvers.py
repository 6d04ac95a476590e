"""
Eigensolvers with accuracy contracts
====================================

LAPACK does the work; the wrappers check residuals.  The hand-written Jacobi
and QR routines serve as independent cross-checks.
"""

import numpy as np

from finite_phase_space import linalg

rng = np.random.default_rng(0)

# a random complex Hermitian matrix
a = rng.normal(size=(21, 21)) + 1j * rng.normal(size=(21, 21))
m = (a + a.conj().T) / 2

dec = linalg.eig_hermitian(m)
print("lowest eigenvalues:", np.round(dec.values[:3], 6))
print("residual / |M|_F:", dec.residual / np.linalg.norm(m))

# the Jacobi route gives the same spectrum
jac = linalg.eig_hermitian(m, method="jacobi")
print("max |lapack - jacobi|:", np.abs(dec.values - jac.values).max())

# general matrices: eigenvalues sorted by real then imaginary part
g = rng.normal(size=(7, 7))
vals = linalg.eig_general(g).values
print("general eigenvalues:", np.round(vals, 4))
print("sum vs trace:", abs(vals.sum() - np.trace(g)))

# Hessenberg reduction followed by shifted QR
print("QR agrees:", np.allclose(np.sort_complex(linalg.qr_eigvals(g)), np.sort_complex(vals)))
