"""Photon-number correlations, windowed spectra, Mandel statistics, totals.

The published windowed spectra and Mandel parameter are printed for the
symmetric 50% splitter; here they carry the general reflectance dependence
obtained by Fourier-transforming the general-R photon correlation functions,
and reduce verbatim to the printed forms at R = T = 1/2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from . import pulse_core
from .params import (
    BeamSplitter,
    Envelope,
    MeasurementWindow,
    MediumParams,
    Port,
    PulseState,
)

SIGN = {Port.OUT1: -1.0, Port.OUT2: 1.0}


class Regime(Enum):
    SUB = "sub-poissonian"
    POISSON = "poissonian"
    SUPER = "super-poissonian"


POISSON_EPS = 1e-12


@dataclass(frozen=True)
class MandelPoint:
    omega: float
    q: float
    regime: Regime


def _classify(q: float) -> Regime:
    if q < -POISSON_EPS:
        return Regime.SUB
    if q > POISSON_EPS:
        return Regime.SUPER
    return Regime.POISSON


def _check_output_port(port: Port) -> float:
    if port is Port.INPUT:
        raise ValueError("photon statistics are defined at the output ports only")
    return SIGN[port]


def photon_correlation(
    port: Port,
    t: float,
    tau,
    medium: MediumParams,
    pulse: PulseState,
    splitter: BeamSplitter,
):
    """Return (smooth part, delta weight n0(t)) of the photon-number correlation.

    Assumes equal mean intensities at both splitter inputs.
    """
    sign = _check_output_port(port)
    r = splitter.reflectance
    tr = splitter.transmittance
    n0 = pulse_core.mean_photon_rate(t, pulse)
    psi = pulse_core.nonlinear_phase(t, medium, pulse)
    phi = psi + pulse.delta_phi
    h = pulse_core.kernel_h(tau, medium.tau_r)
    g = pulse_core.kernel_g(tau, medium.tau_r)
    first_scale = r if port is Port.OUT1 else tr
    smooth = n0 * (
        sign * 2.0 * first_scale * math.sqrt(r * tr) * psi * h * np.cos(phi)
        + r * tr * psi * h * np.sin(2.0 * phi)
        + r * tr * psi * psi * g * np.cos(phi) ** 2
    )
    return smooth, n0


def _q_bracket(port: Port, psi, ell, phi, splitter: BeamSplitter):
    """Frequency-resolved excess factor; at R = T = 1/2 this is the printed
    -/+ cos + sin(2.)/2 + psi L cos^2 bracket times psi L."""
    sign = SIGN[port]
    r = splitter.reflectance
    tr = splitter.transmittance
    first_scale = r if port is Port.OUT1 else tr
    pl = np.asarray(psi, dtype=float) * np.asarray(ell, dtype=float)
    return pl * (
        sign * 4.0 * first_scale * math.sqrt(r * tr) * np.cos(phi)
        + 2.0 * r * tr * np.sin(2.0 * phi)
        + 4.0 * r * tr * pl * np.cos(phi) ** 2
    )


def photon_spectrum(
    port: Port,
    omega,
    t: float,
    window: MeasurementWindow,
    medium: MediumParams,
    pulse: PulseState,
    splitter: BeamSplitter,
):
    """Windowed photon-number noise spectrum; shot-noise floor is Nbar."""
    _check_output_port(port)
    om = np.asarray(omega, dtype=float)
    if not np.all(np.isfinite(om)):
        raise ValueError("omega must be finite")
    n0 = pulse_core.mean_photon_rate(t, pulse)
    psi = pulse_core.nonlinear_phase(t, medium, pulse)
    phi = psi + pulse.delta_phi
    ell = pulse_core.lorentzian(om)
    nbar = total_photon_input(pulse)
    value = nbar + n0 * window.ratio * _q_bracket(port, psi, ell, phi, splitter)
    return float(value) if np.ndim(omega) == 0 else value


def mandel_q(
    port: Port,
    omega: float,
    t: float,
    window: MeasurementWindow,
    medium: MediumParams,
    pulse: PulseState,
    splitter: BeamSplitter,
    reduced: bool = False,
) -> MandelPoint:
    """Extended Mandel parameter Q = (S - Nbar) / n0(t).

    With reduced=True only the leading interference term is kept, which is
    the monochromatic limit (no intermode-correlation terms).
    """
    _check_output_port(port)
    n0 = pulse_core.mean_photon_rate(t, pulse)
    if n0 <= 0.0:
        raise ValueError("mean photon rate is zero; photon statistics undefined")
    psi = pulse_core.nonlinear_phase(t, medium, pulse)
    phi = psi + pulse.delta_phi
    ell = pulse_core.lorentzian(omega)
    if reduced:
        sign = SIGN[port]
        r = splitter.reflectance
        tr = splitter.transmittance
        first_scale = r if port is Port.OUT1 else tr
        bracket = psi * ell * (
            sign * 4.0 * first_scale * math.sqrt(r * tr) * np.cos(phi)
        )
    else:
        bracket = _q_bracket(port, psi, ell, phi, splitter)
    q = float(window.ratio * bracket)
    return MandelPoint(omega=float(omega), q=q, regime=_classify(q))


def mean_photons_windowed(
    port: Port,
    t: float,
    window: MeasurementWindow,
    medium: MediumParams,
    pulse: PulseState,
    splitter: BeamSplitter,
) -> float:
    """Mean photon count in the measurement window at the chosen port."""
    sign = _check_output_port(port)
    n0 = pulse_core.mean_photon_rate(t, pulse)
    psi = pulse_core.nonlinear_phase(t, medium, pulse)
    interf = 2.0 * math.sqrt(splitter.reflectance * splitter.transmittance) * np.sin(
        psi + pulse.delta_phi
    )
    return float(window.t_meas * n0 * (1.0 + sign * interf))


def total_photon_ratio(port: Port, psi0, delta_phi: float, splitter: BeamSplitter):
    """Published closed form for Nbar_j / Nbar vs the peak nonlinear phase psi0.

    Port 1 carries the printed minus sign; port 2 is the symmetric plus-sign
    extension so that the two ports sum to 2 exactly.
    """
    sign = _check_output_port(port)
    x = np.asarray(psi0, dtype=float) / 4.0
    if not np.all(np.isfinite(x)):
        raise ValueError("psi0 must be finite")
    sinc = np.sinc(x / np.pi)  # sin(x)/x with the x = 0 limit built in
    value = 1.0 + sign * (
        2.0
        * math.sqrt(splitter.reflectance * splitter.transmittance)
        * sinc
        * np.sin(x + delta_phi)
    )
    return float(value) if np.ndim(psi0) == 0 else value


def total_photon_out1(psi0, delta_phi: float, splitter: BeamSplitter):
    return total_photon_ratio(Port.OUT1, psi0, delta_phi, splitter)


def total_photon_input(pulse: PulseState) -> float:
    """Total photon number Nbar of one input pulse.

    Gaussian envelope: the analytic integral n0_peak tau_p sqrt(pi).  The flat
    envelope has no intrinsic extent, so it is integrated numerically over the
    nominal support |t| <= tau_p / 2.
    """
    if pulse.envelope is Envelope.GAUSSIAN:
        return pulse.n0_peak * pulse.tau_p * math.sqrt(math.pi)
    nodes, weights = np.polynomial.legendre.leggauss(64)
    half = pulse.tau_p / 2.0
    t = nodes * half
    return float(half * np.sum(weights * pulse_core.mean_photon_rate(t, pulse)))
