"""Area read off the heat trace, A = 2 pi (P(1/Lambda^2) + 1/3) / Lambda^2.

For the round sphere (first 40 modes) A stays close to 4 pi over a window of
energies. For the fuzzy sphere it peaks and then decays; the peak grows with N.
Below Lambda ~ 1 the +1/3 term makes every curve blow up, so that region
says nothing about geometry.

Run:  python demos/03_area_function.py
"""
import math

from fuzzy_sphere import EnergyGrid, FuzzySphereParams, find_peak, fuzzy_dirac_spectrum, standard_dirac_spectrum, suggest_bracket, sweep

grid = EnergyGrid.log(0.5, 100, 12)
spectra = [standard_dirac_spectrum(40)] + [fuzzy_dirac_spectrum(FuzzySphereParams(n)) for n in (2, 4, 8, 16)]

print("Lambda  " + "  ".join(f"{s.label:>17s}" for s in spectra))
curves = [sweep(s, grid) for s in spectra]
for i, lam in enumerate(grid):
    print(f"{lam:6.2f}  " + "  ".join(f"{c.points[i].area / (4 * math.pi):17.4f}" for c in curves))
print("(values are A / 4 pi)")

print("\narea peaks:")
for s in spectra[1:]:
    res = find_peak(s, "area", suggest_bracket(s, "area"))
    print(f"  {s.label:12s} Lambda* = {res.lambda_star:8.4f}   A* = {res.value:8.4f}")
