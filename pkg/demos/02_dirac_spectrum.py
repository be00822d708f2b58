"""The fuzzy Dirac spectrum is finite, rises, peaks, and falls back to zero.

Run:  python demos/02_dirac_spectrum.py
"""
import numpy as np

from fuzzy_sphere import FuzzySphereParams, fuzzy_dirac_spectrum, fuzzy_eigenvalue_sq, spectrum_table

params = FuzzySphereParams(8, include_zero_modes=True)
print(" l    j    lambda^2   deg")
for l, j, ev, deg in spectrum_table(params):
    print(f"{l:2d}  {j:4.1f}  {ev:9.5f}  {deg:4d}")

# The top mode l = N + 1 is an exact zero mode, since (N + 1)^2 = N(N + 2) + 1.
print("\nzero mode at N=8:", fuzzy_eigenvalue_sq(9, 8))

# Compare with the round sphere lambda^2 = l^2: the fuzzy values bend over.
ls = np.arange(1, 9)
print("ratio fuzzy/round:", np.round(fuzzy_eigenvalue_sq(ls, 8) / ls**2, 3))

# Spectra are stored sorted by eigenvalue. At N = 4 two modes coincide
# (3^2 + 4^2 = 5^2) and are merged into one line.
spec = fuzzy_dirac_spectrum(FuzzySphereParams(4))
print("\nN=4 lines:", [(ln.eigenvalue_sq, ln.degeneracy) for ln in spec.lines], "dim", spec.total_dim)
