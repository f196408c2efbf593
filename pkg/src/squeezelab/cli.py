"""Command-line front end.

Exit codes: 0 success, 2 configuration error, 3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import oracle, sweep
from .sweep import ConfigError, GridAxis, ScenarioConfig


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON scenario file; flags override it")
    parser.add_argument("--psi0", type=float, help="peak nonlinear phase")
    parser.add_argument("--omega", type=float, help="fixed reduced frequency")
    parser.add_argument("--omega0", type=float, help="frequency the phase is optimal at")
    parser.add_argument("--phi1", type=float, help="explicit linear phase (overrides optimal)")
    parser.add_argument("--delta-phi", type=float, dest="delta_phi")
    parser.add_argument("--reflectance", type=float)
    parser.add_argument("--t", type=float, help="evaluation time, units of tau_p")
    parser.add_argument("--t-over-taup", type=float, dest="t_over_taup")
    parser.add_argument("--port", help="input, out1/1, out2/2")
    parser.add_argument(
        "--grid",
        action="append",
        default=None,
        metavar="NAME=START:STOP:COUNT",
        help="sweep axis; repeat for a 2-D grid",
    )
    parser.add_argument("--output", help="CSV output path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="squeezelab",
        description="Quadrature and photon-number noise spectra of an SPM pulse "
        "mixed with a coherent pulse at a beam splitter",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, quantity in (
        ("spectrum", None),
        ("mandel", "mandel_q"),
        ("photon-number", None),
    ):
        p = sub.add_parser(name, help=f"sweep a {name.replace('-', ' ')} quantity")
        _add_common(p)
        if name == "spectrum":
            p.add_argument("--axis", choices=["x", "y"], default=None)
        if name == "photon-number":
            p.add_argument(
                "--quantity",
                choices=["photon_mean", "photon_sum", "photon_total_ratio", "photon_spectrum"],
                default=None,
            )

    p = sub.add_parser("figure", help="reproduce one of the paper-figure datasets")
    p.add_argument("id", choices=sorted(sweep.FIGURES))
    _add_common(p)

    p = sub.add_parser("verify", help="run the oracle and invariant battery")
    p.add_argument("--output", help="JSON report path")
    p.add_argument("--ft-tol", type=float, default=1e-6, dest="ft_tol")
    p.add_argument("--kernel-tol", type=float, default=1e-9, dest="kernel_tol")
    p.add_argument("--audit-tol", type=float, default=1e-12, dest="audit_tol")
    p.add_argument(
        "--skip",
        action="append",
        choices=["oracle"],
        default=None,
        help="skip a check group (only algebraic invariants remain)",
    )
    return parser


def _scenario_from_args(args: argparse.Namespace) -> ScenarioConfig:
    if args.config:
        config = ScenarioConfig.from_json_file(args.config)
    else:
        config = ScenarioConfig(command=args.command, grids=(GridAxis("psi0", 0.0, 10.0, 101),))

    overrides = {
        key: getattr(args, key, None)
        for key in (
            "psi0",
            "omega",
            "omega0",
            "phi1",
            "delta_phi",
            "reflectance",
            "t",
            "t_over_taup",
            "port",
        )
    }
    if getattr(args, "output", None):
        overrides["output_path"] = args.output
    if args.command == "spectrum":
        axis = getattr(args, "axis", None)
        if axis:
            overrides["quantity"] = f"quad_{axis}"
        elif config.quantity not in ("quad_x", "quad_y"):
            overrides["quantity"] = "quad_x"
    elif args.command == "mandel":
        overrides["quantity"] = "mandel_q"
        if overrides.get("port") is None and config.port == "input":
            overrides["port"] = "1"
    elif args.command == "photon-number":
        quantity = getattr(args, "quantity", None)
        if quantity:
            overrides["quantity"] = quantity
        elif config.quantity.startswith("quad"):
            overrides["quantity"] = "photon_mean"
        if overrides.get("port") is None and config.port == "input":
            overrides["port"] = "1"
    config = config.override(**{k: v for k, v in overrides.items() if v is not None})
    if args.grid:
        config = config.override(grids=tuple(GridAxis.parse(g) for g in args.grid))
    return config


def _emit(config: ScenarioConfig, header, rows) -> None:
    sweep.write_csv(config.output_path, header, rows)
    script = sweep.write_plot_script(config.output_path, header)
    print(f"wrote {config.output_path} ({len(rows)} rows) and {script}")


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        if args.command == "verify":
            report = oracle.verification_report(
                ft_tol=args.ft_tol,
                kernel_tol=args.kernel_tol,
                audit_tol=args.audit_tol,
                include_oracle="oracle" not in (args.skip or []),
            )
            for check in report["checks"]:
                print(f"{check['status']:>24}  {check['name']}")
            if args.output:
                oracle.save_report(report, args.output)
                print(f"wrote {args.output}")
            if not report["passed"]:
                print("FAILED:", ", ".join(report["failed_checks"]))
                return 3
            print("all checks passed")
            return 0

        if args.command == "figure":
            overrides = {
                key: getattr(args, key)
                for key in ("delta_phi", "reflectance", "t_over_taup", "omega0", "phi1")
                if getattr(args, key, None) is not None
            }
            if args.output:
                overrides["output_path"] = args.output
            if args.grid:
                overrides["grids"] = [GridAxis.parse(g) for g in args.grid]
            config, (header, rows) = sweep.run_figure(args.id, overrides)
            _emit(config, header, rows)
            return 0

        config = _scenario_from_args(args)
        header, rows = sweep.run_scenario(config)
        _emit(config, header, rows)
        return 0
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except oracle.AccuracyError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
