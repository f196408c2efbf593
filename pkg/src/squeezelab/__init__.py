"""Quantum-noise spectra of a self-phase-modulated pulse interfering with a
coherent pulse at a beam splitter, with an independent numerical oracle."""

from .params import (
    Axis,
    BeamSplitter,
    Envelope,
    ExplicitPhase,
    MeasurementWindow,
    MediumParams,
    NoiseSpectrumPoint,
    OptimalAt,
    PhaseMode,
    Port,
    PulseState,
    QuadratureSelector,
    check_regime,
)
from .photons import (
    MandelPoint,
    Regime,
    mandel_q,
    mean_photons_windowed,
    photon_correlation,
    photon_spectrum,
    total_photon_input,
    total_photon_out1,
    total_photon_ratio,
)
from .pulse_core import (
    damping_mu,
    envelope,
    kernel_g,
    kernel_h,
    lorentzian,
    mean_photon_rate,
    nonlinear_phase,
    optimal_phase,
)
from .quadrature import (
    mean_quadratures,
    paper_optimal_form,
    quad_correlation,
    quad_spectrum,
    spectrum_value,
)

__version__ = "0.1.0"
