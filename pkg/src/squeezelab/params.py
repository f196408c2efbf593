"""Parameter records shared by every layer of the library.

All frequencies are reduced, Omega = omega * tau_r.  Times are in whatever
unit the caller uses for tau_r and tau_p; nothing here assumes seconds.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Union


class Envelope(Enum):
    GAUSSIAN = "gaussian"
    FLAT = "flat"


class Port(Enum):
    INPUT = "input"
    OUT1 = "out1"
    OUT2 = "out2"


class Axis(Enum):
    X = "x"
    Y = "y"


def _require_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class MediumParams:
    """Kerr medium: dimensionless nonlinearity per photon and relaxation time."""

    gamma: float
    tau_r: float

    def __post_init__(self) -> None:
        _require_finite("gamma", self.gamma)
        _require_finite("tau_r", self.tau_r)
        if self.gamma < 0:
            raise ValueError("gamma must be >= 0")
        if self.tau_r <= 0:
            raise ValueError("tau_r must be > 0")

    @property
    def weak_nonlinearity(self) -> bool:
        """False when gamma >= 0.1, i.e. outside the perturbative regime."""
        return self.gamma < 0.1


@dataclass(frozen=True)
class PulseState:
    """Coherent input pulse: peak photon rate, duration, linear phases.

    n0_peak is a photon *rate* (photons per time unit); the mean photon rate
    at time t is n0_peak * envelope(t), so the time integral is a photon count.
    """

    n0_peak: float
    tau_p: float
    phi1: float = 0.0
    phi2: float = 0.0
    envelope: Envelope = Envelope.GAUSSIAN

    def __post_init__(self) -> None:
        for name in ("n0_peak", "tau_p", "phi1", "phi2"):
            _require_finite(name, getattr(self, name))
        if self.n0_peak < 0:
            raise ValueError("n0_peak must be >= 0")
        if self.tau_p <= 0:
            raise ValueError("tau_p must be > 0")

    @property
    def delta_phi(self) -> float:
        return self.phi1 - self.phi2


@dataclass(frozen=True)
class BeamSplitter:
    """Lossless beam splitter described by its reflectance R; T = 1 - R."""

    reflectance: float

    def __post_init__(self) -> None:
        _require_finite("reflectance", self.reflectance)
        if not 0.0 <= self.reflectance <= 1.0:
            raise ValueError("reflectance must lie in [0, 1]")

    @property
    def transmittance(self) -> float:
        return 1.0 - self.reflectance


@dataclass(frozen=True)
class ExplicitPhase:
    """Fixed linear phase phi1 of the nonlinear-arm pulse, in radians."""

    phi: float

    def __post_init__(self) -> None:
        _require_finite("phi", self.phi)


@dataclass(frozen=True)
class OptimalAt:
    """Linear phase chosen to minimise the X-quadrature noise at Omega0."""

    omega0: float

    def __post_init__(self) -> None:
        _require_finite("omega0", self.omega0)


PhaseMode = Union[ExplicitPhase, OptimalAt]


@dataclass(frozen=True)
class MeasurementWindow:
    """Photon-counting window: duration t_meas and the ratio t_meas / tau_p."""

    t_meas: float
    ratio: float

    def __post_init__(self) -> None:
        _require_finite("t_meas", self.t_meas)
        _require_finite("ratio", self.ratio)
        if self.t_meas <= 0:
            raise ValueError("t_meas must be > 0")
        if self.ratio > 1.0:
            warnings.warn(
                "measurement window longer than the pulse "
                f"(ratio={self.ratio:g}); short-window factorization is unreliable",
                stacklevel=2,
            )

    @classmethod
    def from_pulse(cls, t_meas: float, pulse: PulseState) -> "MeasurementWindow":
        return cls(t_meas=t_meas, ratio=t_meas / pulse.tau_p)


def check_regime(medium: MediumParams, pulse: PulseState) -> None:
    """Enforce tau_r << tau_p; hard error at ratio >= 1, warning above 0.1."""
    ratio = medium.tau_r / pulse.tau_p
    if ratio >= 1.0:
        raise ValueError(
            f"tau_r/tau_p = {ratio:g} violates the quasi-static regime (must be < 1)"
        )
    if ratio > 0.1:
        warnings.warn(
            f"tau_r/tau_p = {ratio:g} is large; quasi-static results degrade",
            stacklevel=2,
        )


@dataclass(frozen=True)
class QuadratureSelector:
    """Which quadrature (X or Y) at which beam-splitter port."""

    axis: Axis
    port: Port


@dataclass(frozen=True)
class NoiseSpectrumPoint:
    """A single (Omega, value) sample of a noise spectrum; vacuum level is 1/4."""

    omega: float
    value: float
