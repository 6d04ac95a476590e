"""
Wigner and Husimi functions of a random state
=============================================

Map a density matrix onto the 7 x 7 phase space and compute entropies and the
mutual correlation of the Husimi probability matrix.
"""

import numpy as np

from finite_phase_space import (
    build_kernels,
    husimi_prob,
    husimi_split_and_eigenentropy,
    joint_entropy,
    marginals,
    mutual_correlation,
    quasiprob,
    wigner,
)
from finite_phase_space.validation import random_density

n = 7
kernels = build_kernels(n)
rho = random_density(n, np.random.default_rng(3), rank=1)

# the Wigner function may go negative, it sums to N
w = wigner(rho, kernels).values
print("Wigner min / sum:", w.min(), w.sum())

# the Husimi probability matrix h = F(-1) / N is a distribution
h = husimi_prob(rho, kernels).values
print("Husimi min / sum:", h.min(), h.sum())

# two independent routes to the same grid
print("trace vs Fourier:", np.abs(quasiprob(rho, -1, kernels).values
                                  - quasiprob(rho, -1, kernels, "fourier").values).max())
print("direct vs smoothing:", np.abs(h - husimi_prob(rho, kernels, "smoothing").values).max())

# marginals, entropies, eigenvalue entropy
q, r = marginals(h)
split, ent = husimi_split_and_eigenentropy(h)
print("Q:", np.round(q, 3))
print("joint entropy:", joint_entropy(h))
print("eigen-entropy:", ent)
print("mutual correlation:", mutual_correlation(h))
