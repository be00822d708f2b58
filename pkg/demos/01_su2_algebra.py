"""Build the fuzzy-sphere coordinates and check the algebra they generate.

Run:  python demos/01_su2_algebra.py
"""
import numpy as np

from fuzzy_sphere import FuzzySphereParams, casimir_residual, commutator_residual, fuzzy_coordinates, su2_generators

# The spin-1 generators: J3 is diagonal in the |m> basis, J1 and J2 come from
# the ladder operators.
J1, J2, J3 = su2_generators(2)
print("J3 for N=2:\n", J3.real)
print("Casimir J.J for N=2:\n", (J1 @ J1 + J2 @ J2 + J3 @ J3).real)

# Rescaling by 2 l / sqrt(N(N+2)) turns J.J = N/2 (N/2 + 1) into x.x = l^2.
coords = fuzzy_coordinates(FuzzySphereParams(2))
print("\nscale factor 2/sqrt(8) =", coords.scale)
print("x.x =\n", sum(x @ x for x in coords.matrices).real.round(15))

# Residuals stay at rounding level as N grows.
print("\n   N  commutator   casimir")
for n in (1, 2, 5, 10, 20, 50):
    c = fuzzy_coordinates(FuzzySphereParams(n, radius=2.5))
    print(f"{n:4d}  {commutator_residual(c):.2e}    {casimir_residual(c):.2e}")
