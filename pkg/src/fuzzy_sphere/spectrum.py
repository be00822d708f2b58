"""Dirac spectra: the finite fuzzy-sphere spectrum and the truncated round sphere.

Fuzzy sphere, radius 1, with l = j + 1/2 = 1, ..., N + 1:

    lambda_l^2 = l^2 (1 + (1 - l^2) / (N (N + 2)))
               = l^2 ((N + 1)^2 - l^2) / (N (N + 2)),    multiplicity 4 l.

The second form is evaluated in integers and divided once, so modes with equal
eigenvalues (l_a^2 + l_b^2 = (N + 1)^2) compare equal bit for bit and the top
mode l = N + 1 is exactly zero.
"""
from __future__ import annotations

import dataclasses
from numbers import Real
from types import MappingProxyType
from typing import Mapping, Sequence

import numpy as np

from .algebra import check_positive_int

__all__ = [
    "SpectralLine",
    "DiracSpectrum",
    "FuzzySphereParams",
    "fuzzy_eigenvalue_sq",
    "fuzzy_dirac_spectrum",
    "standard_dirac_spectrum",
    "max_eigenvalue_sq",
    "spectrum_table",
]


@dataclasses.dataclass(frozen=True)
class SpectralLine:
    eigenvalue_sq: float
    degeneracy: int

    def __post_init__(self):
        if not self.eigenvalue_sq >= 0:
            raise ValueError(f"eigenvalue_sq must be >= 0, got {self.eigenvalue_sq}")
        check_positive_int(self.degeneracy, "degeneracy")


@dataclasses.dataclass(frozen=True)
class DiracSpectrum:
    """Eigenvalues of D^2 with multiplicities, ascending.

    ``metadata`` records how the spectrum was built (kind, N or n_max, radius,
    zero-mode flag) and ends up in the header of exported curves.
    """

    lines: tuple[SpectralLine, ...]
    label: str
    metadata: Mapping = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        lines = tuple(self.lines)
        values = [ln.eigenvalue_sq for ln in lines]
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ValueError("spectral lines must be strictly ascending in eigenvalue_sq")
        object.__setattr__(self, "lines", lines)
        object.__setattr__(self, "metadata", MappingProxyType(dict(self.metadata)))

    @classmethod
    def from_modes(cls, eigenvalues_sq: Sequence[float], degeneracies: Sequence[int],
                   label: str, metadata: Mapping | None = None) -> "DiracSpectrum":
        """Sort raw modes and merge those with identical eigenvalues."""
        merged: dict[float, int] = {}
        for ev, deg in zip(eigenvalues_sq, degeneracies):
            ev = float(ev)
            merged[ev] = merged.get(ev, 0) + int(deg)
        lines = tuple(SpectralLine(ev, merged[ev]) for ev in sorted(merged))
        return cls(lines, label, metadata or {})

    @property
    def total_dim(self) -> int:
        return sum(ln.degeneracy for ln in self.lines)

    @property
    def eigenvalues_sq(self) -> np.ndarray:
        return np.array([ln.eigenvalue_sq for ln in self.lines], dtype=float)

    @property
    def degeneracies(self) -> np.ndarray:
        return np.array([ln.degeneracy for ln in self.lines], dtype=float)

    def __len__(self):
        return len(self.lines)


@dataclasses.dataclass(frozen=True)
class FuzzySphereParams:
    n: int
    radius: float = 1.0
    include_zero_modes: bool = False

    def __post_init__(self):
        check_positive_int(self.n)
        if isinstance(self.radius, bool) or not isinstance(self.radius, Real) or not self.radius > 0:
            raise ValueError(f"radius must be positive, got {self.radius!r}")


def fuzzy_eigenvalue_sq(l, n: int, radius: float = 1.0):
    """Squared Dirac eigenvalue of mode l = j + 1/2 (scalar or integer array).

    Values for l > N + 1 lie outside the spectrum and come out negative.
    """
    n = check_positive_int(n)
    l = np.asarray(l, dtype=np.int64)
    num = l * l * ((n + 1) ** 2 - l * l)
    out = num / float(n * (n + 2)) / (radius * radius)
    return out[()] if out.ndim == 0 else out


def fuzzy_dirac_spectrum(params: FuzzySphereParams) -> DiracSpectrum:
    """Fuzzy-sphere spectrum for l = 1..N, plus l = N + 1 when zero modes are included.

    >>> [(ln.eigenvalue_sq, ln.degeneracy) for ln in fuzzy_dirac_spectrum(FuzzySphereParams(2)).lines]
    [(1.0, 4), (2.5, 8)]
    """
    n = params.n
    top = n + 1 if params.include_zero_modes else n
    ls = np.arange(1, top + 1)
    label = f"fuzzy N={n}"
    if params.radius != 1:
        label += f" radius={params.radius:g}"
    if params.include_zero_modes:
        label += " +zero modes"
    meta = {"kind": "fuzzy", "n": n, "radius": float(params.radius),
            "include_zero_modes": bool(params.include_zero_modes)}
    return DiracSpectrum.from_modes(fuzzy_eigenvalue_sq(ls, n, params.radius), 4 * ls, label, meta)


def standard_dirac_spectrum(n_max: int) -> DiracSpectrum:
    """Round unit sphere, eigenvalues n^2 with multiplicity 4n, truncated at n_max."""
    n_max = check_positive_int(n_max, "n_max")
    ns = np.arange(1, n_max + 1)
    meta = {"kind": "standard", "n_max": n_max}
    return DiracSpectrum.from_modes(ns.astype(float) ** 2, 4 * ns, f"standard nmax={n_max}", meta)


def max_eigenvalue_sq(spectrum: DiracSpectrum) -> float:
    if not spectrum.lines:
        raise ValueError("empty spectrum")
    return max(ln.eigenvalue_sq for ln in spectrum.lines)


def spectrum_table(params: FuzzySphereParams | None = None, n_max: int | None = None):
    """Per-mode rows ``(l, j, eigenvalue_sq, degeneracy)`` in order of l.

    Unlike :class:`DiracSpectrum` the rows are neither sorted by eigenvalue
    nor merged, which makes the rise and fall of the fuzzy spectrum visible.
    Pass exactly one of ``params`` (fuzzy) or ``n_max`` (round sphere).
    """
    if (params is None) == (n_max is None):
        raise ValueError("give exactly one of params or n_max")
    if params is not None:
        top = params.n + 1 if params.include_zero_modes else params.n
        ls = range(1, top + 1)
        evs = fuzzy_eigenvalue_sq(np.arange(1, top + 1), params.n, params.radius)
    else:
        n_max = check_positive_int(n_max, "n_max")
        ls = range(1, n_max + 1)
        evs = [float(l * l) for l in ls]
    return [(l, l - 0.5, float(ev), 4 * l) for l, ev in zip(ls, evs)]
