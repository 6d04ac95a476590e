"""
Schwinger operators and mapping kernels
=======================================

Build the clock and shift pair, the theta-function weight and the kernel
tables for the Wigner, Husimi and Glauber-Sudarshan orderings.
"""

import numpy as np

from finite_phase_space import build_kernels, build_schwinger_pair, mapping_weight, theta
from finite_phase_space.schwinger import kernel_invariants, select_theta_convention

# clock U and shift V on N = 5 labels -2..2
pair = build_schwinger_pair(5)
w = np.exp(2j * np.pi / 5)
print("Weyl defect |VU - wUV|:", np.abs(pair.V @ pair.U - w * pair.U @ pair.V).max())

# theta functions at nome parameter a = 1
print("theta3(0|i) =", theta(3, 0.0, 1.0), " theta4(0|i) =", theta(4, 0.0, 1.0))

# the weight K(eta, xi) = M(eta, xi) / M(0, 0)
print(np.round(mapping_weight(5).K, 4))

# kernels for s = -1, 0, 1 and the invariants they must satisfy
table = build_kernels(5)
for key, value in kernel_invariants(table).items():
    print(f"{key:>14}: {value:.3e}")

# only one theta convention leaves the Husimi kernel positive
print("pinned convention:", select_theta_convention())
