"""
LMG spectrum and the double-well picture
========================================

Diagonalize the 21-level multiplet for Np = 20, chi = 1.5 and compare the two
lowest levels with the angle potential.
"""

from finite_phase_space import LMGParams, barrier_report, inverse_mass, potential, potential_profile, spectrum
from finite_phase_space.lmg import well_angle

params = LMGParams(20, 1.5)
spec = spectrum(params)
print("E0, E1:", spec.values[:2], " gap:", spec.gap)
print("parities of the lowest four:", spec.parity[:4])
print("mirror symmetry defect:", spec.mirror_defect())

# the gap closes as the interaction grows
for chi in (0.5, 1.0, 1.5, 2.0):
    print(f"chi = {chi}: gap = {spectrum(LMGParams(20, chi)).gap:.5f}")

# potential and inverse mass
phi_star = well_angle(params)
print("V(0) =", potential(0.0, params), " V(phi*) =", potential(phi_star, params))
print("M^-1(0) =", inverse_mass(0.0, params))

# both lowest levels lie under the central barrier
rep = barrier_report(potential_profile(params), spec)
print(rep.to_dict())
