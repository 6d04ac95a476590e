"""
Spin tunneling seen in the Husimi function
==========================================

Start from the symmetric combination of the two lowest states and watch the
probability move between the two angle half-planes.
"""

from finite_phase_space import LMGParams, angle_masses, build_kernels, husimi_snapshots, initial_state, spectrum

spec = spectrum(LMGParams(20, 1.5))
kernels = build_kernels(spec.dim)
rho0 = initial_state(spec, 0, 1, 0.0)

taus = (0.0, 6.5, 15.9, 25.3)
for tau, grid in zip(taus, husimi_snapshots(rho0, spec, kernels, taus)):
    m = angle_masses(grid)
    print(f"tau = {tau:5.1f}   negative {m['negative']:.3f}   positive {m['positive']:.3f}")

# a coarse text picture of the first snapshot: rows are m, columns the angle
h = husimi_snapshots(rho0, spec, kernels, (6.5,))[0].values
chars = " .:-=+*#%@"
for row in h[::-1]:
    print("".join(chars[min(int(v / h.max() * 9.999), 9)] for v in row))
