"""Quadrature means, fluctuation correlation functions and noise spectra.

The authoritative spectra are the general-phase forms; optimal-phase values
are obtained by substituting the optimal linear phase into them.  The
published optimal-phase closed forms for the beam-splitter outputs are kept
separately in :func:`paper_optimal_form` for auditing only - they disagree
with substitution except at R in {0, 2/3} (see the numeric oracle).

All spectra are written as 1/4 + 1/4 * scale * excess so that the
vacuum-mixing identities S_out - 1/4 = {R,T} (S_in - 1/4) hold to the last
bit, not merely to rounding.
"""
from __future__ import annotations

from typing import Optional

import numpy as np

from . import pulse_core
from .params import (
    Axis,
    BeamSplitter,
    ExplicitPhase,
    MediumParams,
    NoiseSpectrumPoint,
    OptimalAt,
    PhaseMode,
    Port,
    PulseState,
    QuadratureSelector,
)

DELTA_WEIGHT = 0.25  # coefficient of delta(tau) in every quadrature correlation


def total_phase(psi, mode: PhaseMode):
    """Full phase Phi = psi + linear phase for the given phase mode."""
    if isinstance(mode, ExplicitPhase):
        return np.asarray(psi, dtype=float) + mode.phi
    return np.asarray(psi, dtype=float) + pulse_core.optimal_phase(psi, mode.omega0)


def _excess(axis: Axis, psi, ell, phi):
    """Excess noise over vacuum for the *input* pulse, times 4."""
    pl = np.asarray(psi, dtype=float) * np.asarray(ell, dtype=float)
    if axis is Axis.X:
        return -2.0 * pl * np.sin(2.0 * phi) + 4.0 * pl * pl * np.sin(phi) ** 2
    return 2.0 * pl * np.sin(2.0 * phi) + 4.0 * pl * pl * np.cos(phi) ** 2


def _port_scale_axis(axis: Axis, port: Port, splitter: Optional[BeamSplitter]):
    """Map (axis, port) to (scale, input axis whose excess is inherited)."""
    if port is Port.INPUT:
        return 1.0, axis
    if splitter is None:
        raise ValueError(f"port {port.value} requires a beam splitter")
    if port is Port.OUT1:
        # reflection adds a pi/2 geometric phase: X and Y trade places
        swapped = Axis.Y if axis is Axis.X else Axis.X
        return splitter.reflectance, swapped
    return splitter.transmittance, axis


def spectrum_value(
    axis: Axis,
    port: Port,
    omega,
    psi,
    phase: PhaseMode,
    splitter: Optional[BeamSplitter] = None,
):
    """General-phase quadrature noise spectrum; vacuum level 1/4."""
    om = np.asarray(omega, dtype=float)
    if not np.all(np.isfinite(om)):
        raise ValueError("omega must be finite")
    scale, src = _port_scale_axis(axis, port, splitter)
    phi = total_phase(psi, phase)
    ell = pulse_core.lorentzian(om)
    return 0.25 + 0.25 * (scale * _excess(src, psi, ell, phi))


def quad_spectrum(
    selector: QuadratureSelector,
    omega: float,
    t: float,
    medium: MediumParams,
    pulse: PulseState,
    phase: PhaseMode,
    splitter: Optional[BeamSplitter] = None,
) -> NoiseSpectrumPoint:
    psi = pulse_core.nonlinear_phase(t, medium, pulse)
    value = spectrum_value(selector.axis, selector.port, omega, psi, phase, splitter)
    return NoiseSpectrumPoint(omega=float(omega), value=float(value))


def correlation_smooth(
    axis: Axis,
    port: Port,
    tau,
    psi,
    phase: PhaseMode,
    tau_r: float = 1.0,
    splitter: Optional[BeamSplitter] = None,
):
    """Smooth (non-delta) part of the quadrature correlation function.

    The delta(tau) term carries weight DELTA_WEIGHT at every port and is
    reported separately.
    """
    scale, src = _port_scale_axis(axis, port, splitter)
    phi = total_phase(psi, phase)
    h = pulse_core.kernel_h(tau, tau_r)
    g = pulse_core.kernel_g(tau, tau_r)
    ps = np.asarray(psi, dtype=float)
    if src is Axis.X:
        smooth = -ps * h * np.sin(2.0 * phi) + ps * ps * g * np.sin(phi) ** 2
    else:
        smooth = ps * h * np.sin(2.0 * phi) + ps * ps * g * np.cos(phi) ** 2
    return 0.25 * scale * smooth


def quad_correlation(
    selector: QuadratureSelector,
    t: float,
    tau: float,
    medium: MediumParams,
    pulse: PulseState,
    phase: PhaseMode,
    splitter: Optional[BeamSplitter] = None,
):
    """Return (smooth part, delta weight) of the correlation at lag tau."""
    psi = pulse_core.nonlinear_phase(t, medium, pulse)
    smooth = correlation_smooth(
        selector.axis, selector.port, tau, psi, phase, medium.tau_r, splitter
    )
    return float(smooth), DELTA_WEIGHT


def mean_quadratures(
    port: Port,
    t: float,
    medium: MediumParams,
    pulse: PulseState,
    splitter: Optional[BeamSplitter] = None,
):
    """Mean quadrature pair (x, y) at the chosen port."""
    psi = pulse_core.nonlinear_phase(t, medium, pulse)
    mu = pulse_core.damping_mu(t, medium, pulse)
    amp = np.sqrt(pulse_core.mean_photon_rate(t, pulse)) * np.exp(-mu)
    phi1_full = psi + pulse.phi1
    if port is Port.INPUT:
        return float(amp * np.cos(phi1_full)), float(amp * np.sin(phi1_full))
    if splitter is None:
        raise ValueError(f"port {port.value} requires a beam splitter")
    sr = np.sqrt(splitter.reflectance)
    st = np.sqrt(splitter.transmittance)
    if port is Port.OUT1:
        x = amp * (st * np.cos(pulse.phi2) - sr * np.sin(phi1_full))
        y = amp * (st * np.sin(pulse.phi2) + sr * np.cos(phi1_full))
    else:
        x = amp * (st * np.cos(phi1_full) - sr * np.sin(pulse.phi2))
        y = amp * (st * np.sin(phi1_full) + sr * np.cos(pulse.phi2))
    return float(x), float(y)


# sign of the psi*L term inside the published optimal-phase brackets
_PAPER_SIGN = {
    (Axis.X, Port.INPUT): -1.0,
    (Axis.Y, Port.INPUT): 1.0,
    (Axis.X, Port.OUT1): 1.0,
    (Axis.Y, Port.OUT1): -1.0,
    (Axis.X, Port.OUT2): -1.0,
    (Axis.Y, Port.OUT2): 1.0,
}


def paper_optimal_form(
    axis: Axis,
    port: Port,
    omega,
    omega0: float,
    psi,
    splitter: Optional[BeamSplitter] = None,
):
    """Published optimal-phase closed forms, evaluated verbatim.

    Audit helper only: reproduces the printed expressions including their
    output-port inconsistencies and the differing tail exponents (-1/2 with
    L(Omega) for the input, -1 with L(Omega0) for the outputs).
    """
    ps = np.asarray(psi, dtype=float)
    ell = np.asarray(pulse_core.lorentzian(omega), dtype=float)
    ell0 = pulse_core.lorentzian(omega0)
    p0 = ps * ell0
    root = np.sqrt(1.0 + p0 * p0)
    sign = _PAPER_SIGN[(axis, port)]

    if port is Port.INPUT:
        base = 0.25 * (root + sign * p0) ** 2
        tail = (1.0 + ps * ps * ell * ell) ** -0.5
        scale = 1.0
    else:
        if splitter is None:
            raise ValueError(f"port {port.value} requires a beam splitter")
        scale = splitter.reflectance if port is Port.OUT1 else splitter.transmittance
        base = 0.25 * (
            (root + sign * scale * p0) ** 2 - (2.0 * scale - 1.0) ** 2 * p0 * p0
        )
        tail = (1.0 + p0 * p0) ** -1.0

    correction = (
        0.5
        * scale
        * ps
        * (ell - ell0)
        * ((ell + ell0) * ps + sign * (1.0 + (ell + ell0) * ell0 * ps * ps) * tail)
    )
    value = base + correction
    if np.ndim(psi) == 0 and np.ndim(omega) == 0:
        return float(value)
    return value
