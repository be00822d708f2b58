"""Scale-dependent area A(Lambda) and spectral dimension D_s(Lambda).

With t = 1 / Lambda^2 and P(t) the heat trace,

    A(Lambda)   = 2 pi (P(t) + 1/3) t
    D_s(Lambda) = -2 d ln P / d ln t = +d ln P / d ln Lambda
                = 2 t <lambda^2>_t

where <.>_t is the average over modes weighted by deg * exp(-lambda^2 t).
Below Lambda ~ 1 the heat-kernel reading of both curves is not meaningful
(A grows like 2 pi / (3 Lambda^2) from the constant 1/3 term) but values are
still returned as computed.
"""
from __future__ import annotations

import dataclasses
import math
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Mapping

import numpy as np

from .heat_kernel import UNDERFLOW_EXPONENT, heat_trace
from .spectrum import DiracSpectrum

__all__ = [
    "EnergyGrid",
    "CurvePoint",
    "GeometryCurve",
    "PeakResult",
    "PeakBracketError",
    "area",
    "spectral_dimension",
    "spectral_dimension_fd",
    "sweep",
    "golden_section_max",
    "suggest_bracket",
    "find_peak",
    "OBSERVABLES",
]

THREADS_ENV = "FUZZY_SPHERE_THREADS"


class PeakBracketError(ValueError):
    """Raised when a bracket does not enclose an interior maximum."""


@dataclasses.dataclass(frozen=True)
class EnergyGrid:
    values: tuple[float, ...]
    spec: Mapping = dataclasses.field(default_factory=dict, compare=False)

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        if not values:
            raise ValueError("energy grid is empty")
        if not all(v > 0 and math.isfinite(v) for v in values):
            raise ValueError("energy grid values must be positive and finite")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ValueError("energy grid must be strictly increasing")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "spec", dict(self.spec) or {"kind": "explicit", "count": len(values)})

    @classmethod
    def log(cls, lo: float, hi: float, count: int) -> "EnergyGrid":
        cls._check_range(lo, hi, count)
        values = np.geomspace(lo, hi, count)
        values[0], values[-1] = lo, hi
        return cls(tuple(values), {"kind": "log", "min": float(lo), "max": float(hi), "count": count})

    @classmethod
    def linear(cls, lo: float, hi: float, count: int) -> "EnergyGrid":
        cls._check_range(lo, hi, count)
        values = np.linspace(lo, hi, count)
        return cls(tuple(values), {"kind": "linear", "min": float(lo), "max": float(hi), "count": count})

    @classmethod
    def default(cls) -> "EnergyGrid":
        return cls.log(0.1, 100.0, 200)

    @staticmethod
    def _check_range(lo, hi, count):
        if not (0 < lo < hi):
            raise ValueError(f"need 0 < min < max, got min={lo}, max={hi}")
        if int(count) != count or count < 2:
            raise ValueError(f"grid needs at least 2 points, got {count}")

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@dataclasses.dataclass(frozen=True)
class CurvePoint:
    lambda_: float
    t: float
    trace: float
    area: float
    dimension: float


@dataclasses.dataclass(frozen=True)
class GeometryCurve:
    label: str
    points: tuple[CurvePoint, ...]
    metadata: Mapping = dataclasses.field(default_factory=dict)

    def column(self, name: str) -> np.ndarray:
        attr = "lambda_" if name == "lambda" else name
        return np.array([getattr(p, attr) for p in self.points])


@dataclasses.dataclass(frozen=True)
class PeakResult:
    lambda_star: float
    value: float
    bracket: tuple[float, float]


def _check_lambda(lam: float) -> float:
    lam = float(lam)
    if not lam > 0 or not math.isfinite(lam):
        raise ValueError(f"energy scale must be positive and finite, got {lam}")
    return lam


def _diffusion_time(lam: float) -> float:
    return 1.0 / (lam * lam)


def area(spectrum: DiracSpectrum, lam: float) -> float:
    """Area function 2 pi (P(1/lam^2) + 1/3) / lam^2.

    Equals 4 pi in the small-t limit for the full round unit sphere.
    """
    t = _diffusion_time(_check_lambda(lam))
    return 2 * math.pi * (heat_trace(spectrum, t) + 1 / 3) * t


def _dimension_at_t(spectrum: DiracSpectrum, t: float) -> float:
    if not spectrum.lines:
        raise ValueError("empty spectrum")
    # Weights are shifted by the lowest eigenvalue so large t cannot underflow
    # every term; the shift cancels in the ratio.
    ev_min = spectrum.lines[0].eigenvalue_sq
    num, den = [], []
    for line in spectrum.lines:
        x = (line.eigenvalue_sq - ev_min) * t
        if x > UNDERFLOW_EXPONENT:
            break
        w = line.degeneracy * math.exp(-x)
        den.append(w)
        num.append(w * line.eigenvalue_sq)
    mean = math.fsum(num) / math.fsum(den)
    return 2 * t * mean


def spectral_dimension(spectrum: DiracSpectrum, lam: float) -> float:
    """Spectral dimension at energy ``lam``, from the exact t-derivative.

    >>> from fuzzy_sphere.spectrum import DiracSpectrum, SpectralLine
    >>> spectral_dimension(DiracSpectrum((SpectralLine(1.0, 4),), "one line"), 2.0)
    0.5
    """
    return _dimension_at_t(spectrum, _diffusion_time(_check_lambda(lam)))


def spectral_dimension_fd(spectrum: DiracSpectrum, lam: float, rel_step: float = 1e-4) -> float:
    """Central difference of ln P in ln Lambda at Lambda (1 -+ rel_step).

    Cross-check for :func:`spectral_dimension`; error is O(rel_step^2).
    """
    lam = _check_lambda(lam)
    if not 0 < rel_step < 0.1:
        raise ValueError(f"rel_step must lie in (0, 0.1), got {rel_step}")
    lo, hi = lam * (1 - rel_step), lam * (1 + rel_step)
    if lo <= 0:
        raise ValueError("step reaches nonpositive energy")
    p_lo = heat_trace(spectrum, _diffusion_time(lo))
    p_hi = heat_trace(spectrum, _diffusion_time(hi))
    return (math.log(p_hi) - math.log(p_lo)) / (math.log(hi) - math.log(lo))


OBSERVABLES: dict[str, Callable[[DiracSpectrum, float], float]] = {
    "area": area,
    "dimension": spectral_dimension,
}


def _observable(which: str):
    try:
        return OBSERVABLES[which]
    except KeyError:
        raise ValueError(f"unknown observable {which!r}; choose from {sorted(OBSERVABLES)}") from None


def _curve_point(spectrum: DiracSpectrum, lam: float) -> CurvePoint:
    t = _diffusion_time(lam)
    trace = heat_trace(spectrum, t)
    return CurvePoint(
        lambda_=lam,
        t=t,
        trace=trace,
        area=2 * math.pi * (trace + 1 / 3) * t,
        dimension=_dimension_at_t(spectrum, t),
    )


def default_workers() -> int:
    raw = os.environ.get(THREADS_ENV, "").strip()
    if not raw:
        return 1
    workers = int(raw)
    if workers < 1:
        raise ValueError(f"{THREADS_ENV} must be >= 1, got {raw}")
    return workers


def sweep(spectrum: DiracSpectrum, grid: EnergyGrid | Iterable[float], workers: int | None = None) -> GeometryCurve:
    """Evaluate trace, area and dimension at every grid point.

    Points are independent; with ``workers > 1`` they are evaluated on a
    thread pool, and the result is identical to a sequential run.
    """
    if not isinstance(grid, EnergyGrid):
        grid = EnergyGrid(tuple(grid))
    workers = default_workers() if workers is None else workers
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            points = tuple(pool.map(lambda lam: _curve_point(spectrum, lam), grid.values))
    else:
        points = tuple(_curve_point(spectrum, lam) for lam in grid.values)
    meta = dict(spectrum.metadata)
    meta["label"] = spectrum.label
    meta["grid"] = dict(grid.spec)
    return GeometryCurve(spectrum.label, points, meta)


_INV_PHI = (math.sqrt(5) - 1) / 2


def golden_section_max(f: Callable[[float], float], lo: float, hi: float, rtol: float = 1e-6):
    """Maximise a unimodal f on [lo, hi] (0 < lo < hi) by golden-section search.

    Works in log(x), stopping once the bracket is narrower than ``rtol``
    relative to x. Returns ``(x, f(x))``.
    """
    a, b = math.log(lo), math.log(hi)
    g = lambda u: f(math.exp(u))
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = g(c), g(d)
    # bracket width in log(x) is the relative width in x
    while b - a > rtol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = g(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = g(d)
    x = math.exp((a + b) / 2)
    return x, f(x)


def _log_scan(f, lo, hi, points):
    xs = np.geomspace(lo, hi, points)
    xs[0], xs[-1] = lo, hi
    return xs, np.array([f(x) for x in xs])


def suggest_bracket(spectrum: DiracSpectrum, which: str, lo: float = 0.1, hi: float = 100.0,
                    points: int = 512) -> tuple[float, float]:
    """Bracket for :func:`find_peak` that skips the low-energy rise.

    Both observables blow up as Lambda -> 0, fall to a local minimum, and (when
    a peak exists) rise to an interior maximum. The bracket runs from the
    first local minimum of a coarse log scan to ``hi``. From N ~ 64 on the
    dimension curve grows a second, lower hump at higher energy; the bracket
    then holds both and :func:`find_peak` returns the higher one.
    """
    f = _observable(which)
    xs, ys = _log_scan(lambda x: f(spectrum, x), lo, hi, points)
    interior = np.flatnonzero((ys[1:-1] < ys[:-2]) & (ys[1:-1] <= ys[2:])) + 1
    if interior.size == 0:
        raise PeakBracketError(f"{which} of {spectrum.label} has no interior minimum on [{lo}, {hi}]")
    return float(xs[interior[0]]), float(hi)


def find_peak(spectrum: DiracSpectrum, which: str, bracket: tuple[float, float],
              rtol: float = 1e-6, scan_points: int = 512) -> PeakResult:
    """Locate the maximum of ``area`` or ``dimension`` inside ``bracket``.

    A coarse log-spaced scan picks the best grid point; golden-section search
    then refines between its neighbours to relative tolerance ``rtol`` in
    Lambda. A scan maximum on either end of the bracket raises
    :class:`PeakBracketError` rather than returning an edge value.
    """
    lo, hi = (float(b) for b in bracket)
    if not (0 < lo < hi):
        raise ValueError(f"need 0 < lo < hi, got {bracket}")
    f = _observable(which)
    obs = lambda x: f(spectrum, x)
    xs, ys = _log_scan(obs, lo, hi, scan_points)
    k = int(np.argmax(ys))
    if k == 0 or k == len(xs) - 1:
        side = "lower" if k == 0 else "upper"
        raise PeakBracketError(
            f"{which} of {spectrum.label} is largest at the {side} end of [{lo}, {hi}]; "
            "no interior peak in bracket")
    x, value = golden_section_max(obs, float(xs[k - 1]), float(xs[k + 1]), rtol)
    if value < ys[k]:
        x, value = float(xs[k]), float(ys[k])
    return PeakResult(lambda_star=x, value=value, bracket=(lo, hi))
