"""Heat trace P(t) = sum deg * exp(-lambda^2 t) and its t-derivative."""
from __future__ import annotations

import dataclasses
import math

from .spectrum import DiracSpectrum

__all__ = [
    "HeatTracePoint",
    "UNDERFLOW_EXPONENT",
    "heat_trace",
    "heat_trace_derivative",
    "heat_trace_point",
    "standard_asymptotic_trace",
]

# exp(-x) for x beyond this is below the smallest subnormal double
UNDERFLOW_EXPONENT = 745.0


@dataclasses.dataclass(frozen=True)
class HeatTracePoint:
    t: float
    trace: float
    trace_t_derivative: float


def _check_t(t: float) -> float:
    t = float(t)
    if not t >= 0:
        raise ValueError(f"diffusion time must be >= 0, got {t}")
    return t


def _weights(spectrum: DiracSpectrum, t: float, power: int):
    # deg * ev**power * exp(-ev t), smallest terms first
    terms = []
    for line in spectrum.lines:
        x = line.eigenvalue_sq * t
        if x > UNDERFLOW_EXPONENT:
            continue
        terms.append(line.degeneracy * line.eigenvalue_sq**power * math.exp(-x))
    terms.sort()
    return terms


def heat_trace(spectrum: DiracSpectrum, t: float) -> float:
    """Trace of exp(-t D^2). ``t == 0`` returns the total dimension.

    Summation uses :func:`math.fsum`, so the result is the correctly rounded
    sum of the (individually rounded) terms and does not depend on term order.
    """
    t = _check_t(t)
    if t == 0:
        return float(spectrum.total_dim)
    return math.fsum(_weights(spectrum, t, 0))


def heat_trace_derivative(spectrum: DiracSpectrum, t: float) -> float:
    t = _check_t(t)
    return -math.fsum(_weights(spectrum, t, 1))


def heat_trace_point(spectrum: DiracSpectrum, t: float) -> HeatTracePoint:
    return HeatTracePoint(float(t), heat_trace(spectrum, t), heat_trace_derivative(spectrum, t))


def standard_asymptotic_trace(t: float, area: float = 4 * math.pi) -> float:
    """Two-term small-t expansion area / (2 pi t) - 1/3 of the round-sphere trace."""
    if not t > 0:
        raise ValueError(f"t must be positive, got {t}")
    return area / (2 * math.pi * t) - 1 / 3
