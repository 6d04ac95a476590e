"""Command-line front end: ``fps-lmg <subcommand> [options]``.

Options may also come from a JSON file given with ``--config``; explicit
flags take precedence.  Exit codes: 0 ok, 1 validation failure, 2 config
error, 3 numerical failure, 4 insufficient data.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from pathlib import Path

from . import __version__
from .config import TOLERANCES
from .dynamics import DEFAULT_SNAPSHOTS, SERIES_LABELS, TimeGrid, angle_masses, estimate_gap, husimi_snapshots, series
from .errors import InvalidParams, PhaseSpaceError, TooFewPeaks
from .io import gap_json, sha256, spectrum_json, write_grid_csv, write_json, write_profile_csv, write_series_csv
from .lmg import LMGParams, barrier_report, initial_state, potential_profile, spectrum
from .schwinger import build_kernels, dump_kernels
from .validation import format_report, run_checks

EXIT_OK, EXIT_VALIDATION, EXIT_CONFIG, EXIT_NUMERICAL, EXIT_DATA = 0, 1, 2, 3, 4

DEFAULTS = {
    "np": 20,
    "chi": 1.5,
    "out": ".",
    "tmin": 0.0,
    "tmax": 60.0,
    "dt": 0.05,
    "snapshots": list(DEFAULT_SNAPSHOTS),
    "threshold": TOLERANCES.localization_threshold,
    "which": list(SERIES_LABELS[:2]),
    "samples": 721,
    "seed": 0,
    "threads": 1,
    "phase": 0.0,
    "theta_convention": "2pi",
    "dump_kernels": None,
    "tolerances": {},
}


class ConfigError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with option values")
    common.add_argument("--np", type=int, dest="np", default=None, help="particle number (even)")
    common.add_argument("--chi", type=float, default=None, help="interaction strength")
    common.add_argument("--out", default=None, help="output directory")
    common.add_argument("--threads", type=int, default=None)

    timing = argparse.ArgumentParser(add_help=False)
    timing.add_argument("--tmin", type=float, default=None)
    timing.add_argument("--tmax", type=float, default=None)
    timing.add_argument("--dt", type=float, default=None)
    timing.add_argument("--phase", type=float, default=None, help="relative phase of the initial state")
    timing.add_argument("--which", nargs="+", choices=SERIES_LABELS, default=None)

    p = argparse.ArgumentParser(prog="fps-lmg", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("spectrum", parents=[common], help="diagonalize H_L and write spectrum.json")
    ev = sub.add_parser("evolve", parents=[common], help="write Husimi snapshots")
    ev.add_argument("--snapshots", type=float, nargs="+", default=None)
    ev.add_argument("--threshold", type=float, default=None, help="one-sided mass counted as localized")
    ev.add_argument("--phase", type=float, default=None)
    sub.add_parser("series", parents=[common, timing], help="write functional time series")
    sub.add_parser("gap", parents=[common, timing], help="write series and gap estimates")
    pot = sub.add_parser("potential", parents=[common], help="write the angle potential profile")
    pot.add_argument("--samples", type=int, default=None)
    val = sub.add_parser("validate", parents=[common], help="run the invariant suite")
    val.add_argument("--seed", type=int, default=None)
    val.add_argument("--theta-convention", dest="theta_convention", choices=("2pi", "2"), default=None,
                     help="debug: build kernels with another theta convention")
    val.add_argument("--dump-kernels", dest="dump_kernels", default=None,
                     help="write the N=3 kernel table as text to this path")
    return p


def resolve_config(args: argparse.Namespace) -> dict:
    cfg = dict(DEFAULTS)
    if getattr(args, "config", None):
        try:
            with open(args.config, encoding="utf-8") as fh:
                loaded = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config: {exc}") from exc
        unknown = set(loaded) - set(DEFAULTS)
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        cfg.update(loaded)
    for key in DEFAULTS:
        val = getattr(args, key, None)
        if val is not None:
            cfg[key] = val
    if cfg["np"] % 2 or cfg["np"] < 2:
        raise ConfigError("Np must be even")
    if not cfg["dt"] > 0:
        raise ConfigError("dt must be positive")
    try:
        cfg["tol"] = dataclasses.replace(TOLERANCES, **cfg["tolerances"])
    except TypeError as exc:
        raise ConfigError(f"bad tolerance override: {exc}") from exc
    out = Path(cfg["out"])
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise ConfigError(f"output directory not writable: {exc}") from exc
    cfg["out"] = str(out)
    return cfg


def _tau_name(tau: float) -> str:
    return f"husimi_tau{tau:g}.csv"


class Run:
    """Collects emitted files and checks, then writes the manifest."""

    def __init__(self, command: str, cfg: dict):
        self.command = command
        self.cfg = cfg
        self.out = Path(cfg["out"])
        self.files: list[Path] = []
        self.checks: dict = {}
        self.extra: dict = {}
        self.start = time.perf_counter()

    def add(self, path: Path) -> None:
        self.files.append(Path(path))

    def manifest(self) -> Path:
        cfg = {k: v for k, v in self.cfg.items() if k != "tol"}
        body = {
            "command": self.command,
            "config": cfg,
            "version": __version__,
            "wall_time": time.perf_counter() - self.start,
            "checks": self.checks,
            **self.extra,
            "files": [{"path": f.name, "sha256": sha256(f)} for f in self.files],
        }
        return write_json(body, self.out / f"manifest_{self.command}.json")


def _spectrum(cfg):
    try:
        return spectrum(LMGParams(cfg["np"], cfg["chi"]), tol=cfg["tol"])
    except InvalidParams as exc:
        raise ConfigError(str(exc)) from exc


def cmd_spectrum(cfg: dict) -> int:
    run = Run("spectrum", cfg)
    spec = _spectrum(cfg)
    run.add(spectrum_json(spec, run.out / "spectrum.json"))
    run.checks["mirror_symmetry"] = spec.mirror_defect() <= 1e-9
    run.manifest()
    print(f"E0 = {spec.values[0]:.6f}  E1 = {spec.values[1]:.6f}  gap = {spec.gap:.6f}")
    return EXIT_OK


def cmd_evolve(cfg: dict) -> int:
    run = Run("evolve", cfg)
    spec = _spectrum(cfg)
    kernels = build_kernels(spec.dim)
    rho0 = initial_state(spec, 0, 1, cfg["phase"])
    taus = [float(t) for t in cfg["snapshots"]]
    grids = husimi_snapshots(rho0, spec, kernels, taus, threads=cfg["threads"])
    loc = {}
    for tau, g in zip(taus, grids):
        run.add(write_grid_csv(g, run.out / _tau_name(tau)))
        masses = angle_masses(g)
        side = max(("negative", "positive"), key=masses.get)
        loc[f"{tau:g}"] = {**masses, "localized": masses[side] >= cfg["threshold"],
                           "side": side if masses[side] >= cfg["threshold"] else None}
        run.checks[f"normalized tau={tau:g}"] = abs(float(g.values.sum()) - 1) <= 1e-10
        print(f"tau={tau:g}: negative {masses['negative']:.4f}  positive {masses['positive']:.4f}")
    run.extra["localization"] = loc
    run.manifest()
    return EXIT_OK


def _series(cfg: dict, run: Run, with_gap: bool) -> int:
    spec = _spectrum(cfg)
    kernels = build_kernels(spec.dim)
    rho0 = initial_state(spec, 0, 1, cfg["phase"])
    grid = TimeGrid(cfg["tmin"], cfg["tmax"], cfg["dt"])
    status = EXIT_OK
    for label in cfg["which"]:
        s = series(rho0, spec, kernels, grid, label, threads=cfg["threads"])
        run.add(write_series_csv(s, run.out / f"series_{label}.csv"))
        if not with_gap:
            continue
        try:
            gap = estimate_gap(s, spec)
        except TooFewPeaks as exc:
            print(f"{label}: {exc}", file=sys.stderr)
            status = EXIT_DATA
            continue
        run.add(gap_json(gap, run.out / f"gap_{label}.json"))
        run.checks[f"gap {label} within 1%"] = gap.percent_error <= 1.0
        print(f"{label}: delta = {gap.delta:.6f} (exact {gap.reference_delta:.6f}, {gap.percent_error:.4f}%)")
    run.manifest()
    return status


def cmd_series(cfg: dict) -> int:
    return _series(cfg, Run("series", cfg), with_gap=False)


def cmd_gap(cfg: dict) -> int:
    return _series(cfg, Run("gap", cfg), with_gap=True)


def cmd_potential(cfg: dict) -> int:
    run = Run("potential", cfg)
    if cfg["samples"] < 3:
        raise ConfigError("samples must be at least 3")
    spec = _spectrum(cfg)
    profile = potential_profile(spec.params, cfg["samples"])
    report = barrier_report(profile, spec).to_dict()
    report["E0"] = float(spec.values[0])
    report["E1"] = float(spec.values[1])
    run.add(write_profile_csv(profile, run.out / "profile.csv"))
    run.add(write_json(report, run.out / "barrier.json"))
    run.checks["E0, E1 below barrier"] = {0, 1} <= set(report["levels_below_barrier"])
    run.manifest()
    print(f"V(0) = {report['barrier_height']:.6f}  min V = {report['well_depth']:.6f}  "
          f"levels below barrier: {report['levels_below_barrier']}")
    return EXIT_OK


def cmd_validate(cfg: dict) -> int:
    checks = run_checks(seed=cfg["seed"], convention=cfg["theta_convention"])
    report = format_report(checks)
    out = Path(cfg["out"])
    with open(out / "validate_report.txt", "w", encoding="ascii", newline="\n") as fh:
        fh.write(report)
    if cfg["dump_kernels"]:
        dump_kernels(build_kernels(3, convention=cfg["theta_convention"]), cfg["dump_kernels"])
    sys.stdout.write(report)
    return EXIT_OK if all(c.passed for c in checks) else EXIT_VALIDATION


COMMANDS = {
    "spectrum": cmd_spectrum,
    "evolve": cmd_evolve,
    "series": cmd_series,
    "gap": cmd_gap,
    "potential": cmd_potential,
    "validate": cmd_validate,
}


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        cfg = resolve_config(args)
        return COMMANDS[args.command](cfg)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (InvalidParams,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (PhaseSpaceError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
