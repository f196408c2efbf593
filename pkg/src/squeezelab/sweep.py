"""Scenario configs, parameter-grid sweeps, figure presets and CSV emission."""
from __future__ import annotations

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

import numpy as np

from . import photons, quadrature
from .params import (
    Axis,
    BeamSplitter,
    ExplicitPhase,
    MeasurementWindow,
    MediumParams,
    OptimalAt,
    Port,
    PulseState,
)

SQRT2 = math.sqrt(2.0)
AXIS_NAMES = ("psi0", "omega", "delta_phi", "reflectance", "t", "t_over_taup")
QUANTITIES = (
    "quad_x",
    "quad_y",
    "mandel_q",
    "photon_mean",
    "photon_sum",
    "photon_total_ratio",
    "photon_spectrum",
)


class ConfigError(ValueError):
    """Invalid scenario configuration; maps to CLI exit code 2."""


@dataclass(frozen=True)
class GridAxis:
    name: str
    start: float
    stop: float
    count: int

    def __post_init__(self) -> None:
        if self.name not in AXIS_NAMES:
            raise ConfigError(f"unknown grid axis {self.name!r}; choose from {AXIS_NAMES}")
        if self.count < 2:
            raise ConfigError(f"grid {self.name!r}: count must be >= 2, got {self.count}")
        if not self.start < self.stop:
            raise ConfigError(f"grid {self.name!r}: start must be < stop")

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count)

    @classmethod
    def parse(cls, text: str) -> "GridAxis":
        try:
            name, rng = text.split("=", 1)
            start, stop, count = rng.split(":")
            return cls(name=name, start=float(start), stop=float(stop), count=int(count))
        except (ValueError, ConfigError) as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(
                f"grid {text!r} is not of the form name=start:stop:count"
            ) from exc


@dataclass(frozen=True)
class ScenarioConfig:
    command: str = "spectrum"
    quantity: str = "quad_x"
    axis: str = "x"
    port: str = "input"
    psi0: float = 1.0
    omega: float = 0.0
    omega0: float = 0.0
    phi1: Optional[float] = None  # None selects the optimal phase at omega0
    delta_phi: float = 0.0
    reflectance: float = 0.5
    t: float = 0.0  # units of tau_p
    t_over_taup: float = 0.1
    grids: tuple[GridAxis, ...] = ()
    output_path: str = "sweep.csv"

    def __post_init__(self) -> None:
        if self.quantity not in QUANTITIES:
            raise ConfigError(
                f"unknown quantity {self.quantity!r}; choose from {QUANTITIES}"
            )
        if len(self.grids) not in (1, 2):
            raise ConfigError("exactly 1 or 2 grid axes are required")
        names = [g.name for g in self.grids]
        if len(set(names)) != len(names):
            raise ConfigError("grid axes must be distinct")
        if not 0.0 <= self.reflectance <= 1.0:
            raise ConfigError("reflectance must lie in [0, 1]")
        if self.port not in ("input", "out1", "out2", "1", "2"):
            raise ConfigError(f"unknown port {self.port!r}")

    @classmethod
    def from_json_file(cls, path: str) -> "ScenarioConfig":
        try:
            with open(path, "r", encoding="utf-8") as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {path!r}: {exc}") from exc
        grids = tuple(GridAxis(**g) for g in raw.pop("grids", []))
        try:
            return cls(grids=grids, **raw)
        except TypeError as exc:
            raise ConfigError(f"bad config field: {exc}") from exc

    def override(self, **kwargs) -> "ScenarioConfig":
        kwargs = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **kwargs)


def _port_enum(name: str) -> Port:
    return {
        "input": Port.INPUT,
        "out1": Port.OUT1,
        "out2": Port.OUT2,
        "1": Port.OUT1,
        "2": Port.OUT2,
    }[name]


def _state(psi0: float, delta_phi: float) -> tuple[MediumParams, PulseState]:
    """Unit-normalised state (n0_peak = tau_p = 1) with psi(0) = psi0."""
    gamma = psi0 * SQRT2 / 2.0
    return (
        MediumParams(gamma=gamma, tau_r=1e-3),
        PulseState(n0_peak=1.0, tau_p=1.0, phi1=0.0, phi2=-delta_phi),
    )


def _evaluate_point(config: ScenarioConfig, values: dict) -> float:
    psi0 = values.get("psi0", config.psi0)
    omega = values.get("omega", config.omega)
    delta_phi = values.get("delta_phi", config.delta_phi)
    reflectance = values.get("reflectance", config.reflectance)
    t = values.get("t", config.t)
    ratio = values.get("t_over_taup", config.t_over_taup)

    psi_t = psi0 * math.exp(-t * t / 2.0)
    splitter = BeamSplitter(reflectance)
    port = _port_enum(config.port)
    phase = ExplicitPhase(config.phi1) if config.phi1 is not None else OptimalAt(config.omega0)

    if config.quantity in ("quad_x", "quad_y"):
        axis = Axis.X if config.quantity == "quad_x" else Axis.Y
        sp = None if port is Port.INPUT else splitter
        return float(quadrature.spectrum_value(axis, port, omega, psi_t, phase, sp))

    medium, pulse = _state(psi0, delta_phi)
    window = MeasurementWindow(t_meas=ratio * pulse.tau_p, ratio=ratio)
    if config.quantity == "mandel_q":
        return photons.mandel_q(port, omega, t, window, medium, pulse, splitter).q
    if config.quantity == "photon_mean":
        return photons.mean_photons_windowed(port, t, window, medium, pulse, splitter)
    if config.quantity == "photon_sum":
        return photons.mean_photons_windowed(
            Port.OUT1, t, window, medium, pulse, splitter
        ) + photons.mean_photons_windowed(Port.OUT2, t, window, medium, pulse, splitter)
    if config.quantity == "photon_total_ratio":
        return photons.total_photon_ratio(port, psi0, delta_phi, splitter)
    if config.quantity == "photon_spectrum":
        return photons.photon_spectrum(port, omega, t, window, medium, pulse, splitter)
    raise ConfigError(f"unknown quantity {config.quantity!r}")


def quantity_label(config: ScenarioConfig) -> str:
    if config.quantity in ("quad_x", "quad_y"):
        return f"s_{config.quantity[-1]}_{config.port}"
    port = _port_enum(config.port)
    suffix = "1" if port is Port.OUT1 else "2"
    return {
        "mandel_q": f"q_{suffix}",
        "photon_mean": f"n_windowed_{suffix}",
        "photon_sum": "n_windowed_sum",
        "photon_total_ratio": f"n{suffix}_over_n",
        "photon_spectrum": f"s_photon_{suffix}",
    }[config.quantity]


def thread_cap() -> int:
    raw = os.environ.get("SQUEEZELAB_THREADS", "1")
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ConfigError(f"SQUEEZELAB_THREADS must be an integer, got {raw!r}") from exc
    if cap < 0:
        raise ConfigError("SQUEEZELAB_THREADS must be >= 0")
    if cap == 0:
        return os.cpu_count() or 1
    return cap


def run_scenario(config: ScenarioConfig):
    """Evaluate the sweep; returns (header, rows) with outer-axis-major order."""
    header = [g.name for g in config.grids] + [quantity_label(config)]
    outer = config.grids[0].values()
    inner = config.grids[1].values() if len(config.grids) == 2 else None

    def eval_outer(v0: float):
        if inner is None:
            return [(v0, _evaluate_point(config, {config.grids[0].name: v0}))]
        return [
            (
                v0,
                v1,
                _evaluate_point(
                    config, {config.grids[0].name: v0, config.grids[1].name: v1}
                ),
            )
            for v1 in inner
        ]

    workers = thread_cap()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(eval_outer, outer))
    else:
        blocks = [eval_outer(v0) for v0 in outer]
    rows = [row for block in blocks for row in block]
    return header, rows


def write_csv(path: str, header: Sequence[str], rows) -> None:
    """9-significant-digit CSV with LF line endings, for bit-exact diffing."""
    lines = [",".join(header)]
    lines += [",".join(f"{v:.9g}" for v in row) for row in rows]
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines))
        fh.write("\n")


def write_plot_script(csv_path: str, header: Sequence[str]) -> str:
    """Gnuplot sidecar referencing only the CSV; returns the script path."""
    script_path = os.path.splitext(csv_path)[0] + ".gp"
    csv_name = os.path.basename(csv_path)
    lines = [
        "set datafile separator ','",
        "set key off",
    ]
    if len(header) == 2:
        lines += [
            f"set xlabel '{header[0]}'",
            f"set ylabel '{header[1]}'",
            f"plot '{csv_name}' using 1:2 every ::1 with lines",
        ]
    else:
        lines += [
            f"set xlabel '{header[0]}'",
            f"set ylabel '{header[1]}'",
            f"set zlabel '{header[2]}'",
            "set pm3d",
            "set hidden3d",
            f"splot '{csv_name}' using 1:2:3 every ::1 with pm3d",
        ]
    lines.append("pause -1")
    with open(script_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines))
        fh.write("\n")
    return script_path


FIGURES: dict[str, ScenarioConfig] = {
    "fig1": ScenarioConfig(
        command="figure",
        quantity="quad_x",
        port="input",
        grids=(
            GridAxis("psi0", 0.0, 10.0, 101),
            GridAxis("omega", 0.0, 3.0, 61),
        ),
        output_path="fig1.csv",
    ),
    "fig2": ScenarioConfig(
        command="figure",
        quantity="quad_y",
        port="out1",
        reflectance=0.5,
        grids=(
            GridAxis("psi0", 0.0, 10.0, 101),
            GridAxis("omega", 0.0, 3.0, 61),
        ),
        output_path="fig2.csv",
    ),
    "fig3": ScenarioConfig(
        command="figure",
        quantity="mandel_q",
        port="1",
        delta_phi=math.pi / 2.0,
        t_over_taup=0.1,
        reflectance=0.5,
        grids=(
            GridAxis("psi0", 0.0, 6.0, 61),
            GridAxis("omega", 0.0, 3.0, 61),
        ),
        output_path="fig3.csv",
    ),
    "fig4": ScenarioConfig(
        command="figure",
        quantity="photon_total_ratio",
        port="1",
        delta_phi=0.0,
        reflectance=0.5,
        grids=(GridAxis("psi0", 0.0, 30.0, 301),),
        output_path="fig4.csv",
    ),
}


def run_figure(figure_id: str, overrides: Optional[dict] = None):
    """Evaluate one of the preset figure datasets, with optional overrides."""
    if figure_id not in FIGURES:
        raise ConfigError(f"unknown figure {figure_id!r}; choose from {sorted(FIGURES)}")
    config = FIGURES[figure_id]
    if overrides:
        grids = overrides.pop("grids", None)
        config = config.override(**overrides)
        if grids:
            config = replace(config, grids=tuple(grids))
    return config, run_scenario(config)
