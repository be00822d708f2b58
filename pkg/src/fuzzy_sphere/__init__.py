"""Spectral area and dimension of the fuzzy sphere from its Dirac spectrum."""

__version__ = "0.1.0"

from .algebra import (
    CoordinateMatrices,
    casimir_residual,
    commutator_residual,
    fuzzy_coordinates,
    su2_generators,
)
from .heat_kernel import (
    HeatTracePoint,
    heat_trace,
    heat_trace_derivative,
    heat_trace_point,
    standard_asymptotic_trace,
)
from .observables import (
    CurvePoint,
    EnergyGrid,
    GeometryCurve,
    PeakBracketError,
    PeakResult,
    area,
    find_peak,
    golden_section_max,
    spectral_dimension,
    spectral_dimension_fd,
    suggest_bracket,
    sweep,
)
from .spectrum import (
    DiracSpectrum,
    FuzzySphereParams,
    SpectralLine,
    fuzzy_dirac_spectrum,
    fuzzy_eigenvalue_sq,
    max_eigenvalue_sq,
    spectrum_table,
    standard_dirac_spectrum,
)
