"""Scalar building blocks: envelope, nonlinear phase, kernels, optimal phase.

Every function accepts scalars or numpy arrays and broadcasts.
"""
from __future__ import annotations

import numpy as np

from .params import Envelope, MediumParams, PulseState

SQRT2 = np.sqrt(2.0)


def _finite(name, value):
    arr = np.asarray(value, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite")
    return arr


def _unwrap(arr, like):
    if np.isscalar(like) or np.ndim(like) == 0:
        return float(arr)
    return arr


def lorentzian(omega):
    """Relaxation filter 1 / (1 + Omega^2); even in Omega, peak value 1."""
    om = _finite("omega", omega)
    return _unwrap(1.0 / (1.0 + om * om), omega)


def envelope(t, pulse: PulseState):
    """Pulse envelope rho(t): Gaussian exp(-t^2/2 tau_p^2)/sqrt(2), or flat 1/sqrt(2)."""
    tt = _finite("t", t)
    if pulse.envelope is Envelope.GAUSSIAN:
        rho = np.exp(-(tt * tt) / (2.0 * pulse.tau_p**2)) / SQRT2
    else:
        rho = np.full_like(tt, 1.0 / SQRT2)
    return _unwrap(rho, t)


def mean_photon_rate(t, pulse: PulseState):
    """Mean photon rate n0(t) = n0_peak * rho(t)."""
    rho = np.asarray(envelope(t, pulse))
    return _unwrap(pulse.n0_peak * rho, t)


def nonlinear_phase(t, medium: MediumParams, pulse: PulseState):
    """Self-phase-modulation phase psi(t) = 2 gamma n0(t), radians."""
    n0 = np.asarray(mean_photon_rate(t, pulse))
    return _unwrap(2.0 * medium.gamma * n0, t)


def damping_mu(t, medium: MediumParams, pulse: PulseState):
    """Amplitude damping mu(t) = gamma^2 n0(t) = gamma psi(t) / 2."""
    psi = np.asarray(nonlinear_phase(t, medium, pulse))
    return _unwrap(medium.gamma * psi / 2.0, t)


def optimal_phase(psi, omega0):
    """Linear phase minimising the X noise at Omega0.

    phi0 = arctan(1 / (psi L(Omega0))) / 2 - psi, with the psi L -> 0 limit
    pi/4 - psi taken explicitly.
    """
    ps = _finite("psi", psi)
    if np.any(ps < 0):
        raise ValueError("psi must be >= 0")
    arg = ps * lorentzian(omega0)
    with np.errstate(divide="ignore"):
        phi = np.where(
            arg == 0.0,
            np.pi / 4.0 - ps,
            0.5 * np.arctan(1.0 / np.where(arg == 0.0, 1.0, arg)) - ps,
        )
    return _unwrap(phi, psi)


def kernel_h(tau, tau_r: float = 1.0):
    """Kerr response kernel h(tau) = exp(-|tau|/tau_r) / tau_r."""
    tt = _finite("tau", tau)
    return _unwrap(np.exp(-np.abs(tt) / tau_r) / tau_r, tau)


def kernel_g(tau, tau_r: float = 1.0):
    """Second Kerr kernel g(tau) = (1 + |tau|/tau_r) exp(-|tau|/tau_r) / tau_r."""
    tt = _finite("tau", tau)
    a = np.abs(tt) / tau_r
    return _unwrap((1.0 + a) * np.exp(-a) / tau_r, tau)
