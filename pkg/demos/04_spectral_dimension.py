"""Spectral dimension D_s = -2 d ln P / d ln T as a function of energy.

The round sphere sits near 2 once Lambda is a few times the lowest
eigenvalue. The fuzzy sphere overshoots 2, peaks, and falls to 0 once
Lambda exceeds its finite spectrum. Larger N gives a lower peak.

Run:  python demos/04_spectral_dimension.py
"""
from fuzzy_sphere import (
    FuzzySphereParams,
    find_peak,
    fuzzy_dirac_spectrum,
    spectral_dimension,
    spectral_dimension_fd,
    standard_dirac_spectrum,
    suggest_bracket,
)

std = standard_dirac_spectrum(40)
for lam in (2.0, 3.0, 5.0, 10.0):
    print(f"round sphere  Lambda={lam:5.1f}  D_s={spectral_dimension(std, lam):.4f}")

print("\ndimension peaks:")
for n in (4, 8, 16, 32, 64):
    spec = fuzzy_dirac_spectrum(FuzzySphereParams(n))
    res = find_peak(spec, "dimension", suggest_bracket(spec, "dimension"))
    print(f"  N={n:3d}  Lambda* = {res.lambda_star:8.4f}   D_s* = {res.value:.4f}")

# The analytic formula against a finite difference in ln Lambda.
spec = fuzzy_dirac_spectrum(FuzzySphereParams(8))
for lam in (0.5, 2.0, 20.0):
    a, fd = spectral_dimension(spec, lam), spectral_dimension_fd(spec, lam, 1e-4)
    print(f"N=8 Lambda={lam:5.1f}: analytic {a:.10f}  finite-difference {fd:.10f}")
