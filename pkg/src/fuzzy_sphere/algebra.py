"""su(2) generators and fuzzy-sphere coordinate matrices.

The coordinates are x_i = 2 l / sqrt(N (N + 2)) * J_i with J_i the spin-N/2
generators, so that

    [x_i, x_j] = i 2 l / sqrt(N (N + 2)) eps_ijk x_k,     x_i x_i = l^2.

This module only builds and checks these relations; nothing downstream
needs the matrices themselves.
"""
from __future__ import annotations

import dataclasses
import math
from numbers import Integral, Real

import numpy as np

__all__ = [
    "CoordinateMatrices",
    "su2_generators",
    "fuzzy_coordinates",
    "commutator_residual",
    "casimir_residual",
]

# (i, j, k) with eps_ijk = +1
_CYCLIC = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


def check_positive_int(value, name: str = "n") -> int:
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise ValueError(f"{name} must be a positive integer, got {value!r}")
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")
    return int(value)


def su2_generators(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Spin-n/2 irreducible representation (J1, J2, J3) of dimension n + 1.

    Basis ordered by descending magnetic number m = n/2, n/2 - 1, ..., -n/2.

    >>> J1, J2, J3 = su2_generators(1)
    >>> np.diag(J3).real
    array([ 0.5, -0.5])
    """
    n = check_positive_int(n)
    j = n / 2
    m = j - np.arange(n + 1)
    # J+ |m> = sqrt(j(j+1) - m(m+1)) |m+1>; |m+1> sits one row above |m>
    ladder = np.sqrt(j * (j + 1) - m[1:] * (m[1:] + 1))
    jp = np.diag(ladder, k=1).astype(complex)
    jm = jp.conj().T
    j1 = (jp + jm) / 2
    j2 = (jp - jm) / 2j
    j3 = np.diag(m).astype(complex)
    return j1, j2, j3


@dataclasses.dataclass(frozen=True)
class CoordinateMatrices:
    n: int
    radius: float
    x1: np.ndarray
    x2: np.ndarray
    x3: np.ndarray

    def __post_init__(self):
        check_positive_int(self.n)
        if not self.radius > 0:
            raise ValueError(f"radius must be positive, got {self.radius}")
        shape = (self.n + 1, self.n + 1)
        for x in self.matrices:
            if np.shape(x) != shape:
                raise ValueError(f"coordinate matrices must have shape {shape}, got {np.shape(x)}")

    @property
    def matrices(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self.x1, self.x2, self.x3

    @property
    def scale(self) -> float:
        """Noncommutativity scale 2 l / sqrt(N (N + 2))."""
        return 2 * self.radius / math.sqrt(self.n * (self.n + 2))


def fuzzy_coordinates(params) -> CoordinateMatrices:
    """Build x1, x2, x3 for a :class:`~fuzzy_sphere.spectrum.FuzzySphereParams`.

    Any object with integer ``n`` and real ``radius`` attributes is accepted.
    """
    n = check_positive_int(params.n)
    radius = params.radius
    if not isinstance(radius, Real) or not radius > 0:
        raise ValueError(f"radius must be positive, got {radius!r}")
    scale = 2 * radius / math.sqrt(n * (n + 2))
    x1, x2, x3 = (scale * J for J in su2_generators(n))
    return CoordinateMatrices(n=n, radius=float(radius), x1=x1, x2=x2, x3=x3)


def _max_abs(a: np.ndarray) -> float:
    return float(np.max(np.abs(a)))


def commutator_residual(coords: CoordinateMatrices) -> float:
    x = coords.matrices
    s = coords.scale
    worst = 0.0
    for i, j, k in _CYCLIC:
        comm = x[i] @ x[j] - x[j] @ x[i]
        worst = max(worst, _max_abs(comm - 1j * s * x[k]))
    # diagonal commutators [x_i, x_i] vanish identically; antisymmetry covers (j, i)
    return worst


def casimir_residual(coords: CoordinateMatrices) -> float:
    """Max-entry deviation of x1^2 + x2^2 + x3^2 from radius^2 times identity."""
    total = sum(x @ x for x in coords.matrices)
    return _max_abs(total - coords.radius**2 * np.eye(coords.n + 1))
