"""Command-line front end.

Subcommands:
  cavity     resonator report (FSR, finesse, FWHM, threshold, escape efficiency)
  spectrum   analytic detected squeezing spectrum
  correct    bright-beam shot-noise corrections of an observed dB value
  interfere  coherent-vs-squeezed modulation-detection comparison (two PSDs)
  trace      PSD of a synthesized photocurrent trace against the analytic target
  capacity   channel-capacity curves versus mean photon number

Every output CSV gets a sidecar `.meta` file with the fully resolved
scenario, the seed and the RNG algorithm, so any result is reproducible
from its own metadata.  Exit codes: 0 success, 1 runtime numeric failure,
2 configuration/validation failure.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import sys
from pathlib import Path

import numpy as np

from . import capacity as capacity_mod
from . import cavity as cavity_mod
from . import homodyne, scenario, spectrum, tracesim
from .scenario import PRESET_ASSUMPTIONS, Scenario, ScenarioError
from .spectrum import TraceLabel


def scenario_hash(scn: Scenario) -> str:
    return hashlib.sha256(scenario.serialize(scn).encode()).hexdigest()[:12]


def write_metadata(path: Path, scn: Scenario, subcommand: str, extra: dict | None = None) -> None:
    lines = [f"subcommand = {subcommand}", f"rng.algorithm = {tracesim.RNG_ALGORITHM}"]
    if extra:
        lines += [f"{k} = {v}" for k, v in extra.items()]
    lines.append(f"assumptions = {','.join(PRESET_ASSUMPTIONS)}")
    lines.append(scenario.serialize(scn).rstrip("\n"))
    path.write_text("\n".join(lines) + "\n")


def _out_paths(out_dir: Path, name: str, scn: Scenario) -> tuple[Path, Path]:
    stem = f"{name}-{scenario_hash(scn)}"
    return out_dir / f"{stem}.csv", out_dir / f"{stem}.meta"


def run_cavity(scn: Scenario, out_dir: Path, args) -> Path:
    c = scn.cavity
    rows = [
        ("free_spectral_range_hz", cavity_mod.free_spectral_range(c)),
        ("finesse", cavity_mod.finesse(c)),
        ("fwhm_hz", cavity_mod.fwhm(c)),
        ("threshold_power_w", cavity_mod.threshold_power(c)),
        ("escape_efficiency", cavity_mod.escape_efficiency(c)),
    ]
    csv_path, meta_path = _out_paths(out_dir, "cavity", scn)
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["quantity", "value"])
        for name, value in rows:
            writer.writerow([name, repr(value)])
            print(f"{name} = {value:.6g}")
    write_metadata(meta_path, scn, "cavity")
    return csv_path


def run_spectrum(scn: Scenario, out_dir: Path, args) -> Path:
    op = scn.operating_point()
    grid = spectrum.default_frequency_grid()
    traces = [
        spectrum.detected_spectrum(op, scn.chain, grid, TraceLabel.SQUEEZED_QUADRATURE),
        spectrum.detected_spectrum(op, scn.chain, grid, TraceLabel.ANTISQUEEZED_QUADRATURE),
        spectrum.flat_trace(0.0, grid, TraceLabel.SHOT_NOISE),
    ]
    if scn.trace.electronic_floor_db is not None:
        traces.append(
            spectrum.flat_trace(scn.trace.electronic_floor_db, grid, TraceLabel.ELECTRONIC_NOISE)
        )
    csv_path, meta_path = _out_paths(out_dir, "spectrum", scn)
    spectrum.write_traces_csv(csv_path, traces)
    write_metadata(meta_path, scn, "spectrum")
    print(f"wrote {len(traces)} traces, {grid.size} points each -> {csv_path}")
    return csv_path


def run_correct(scn: Scenario, out_dir: Path, args) -> Path:
    observed_ratio = 10.0 ** (args.observed_db / 10.0)
    power_ratio = args.power_ratio if args.power_ratio is not None else scn.homodyne.power_ratio
    if args.mode == "blocked":
        corrected = homodyne.correct_blocked_shot_noise(observed_ratio, power_ratio)
    else:
        corrected = homodyne.correct_equal_power_shot_noise(observed_ratio, power_ratio)
    corrected_db = 10.0 * np.log10(corrected)
    print(f"corrected squeezing: {corrected_db:.2f} dB")
    csv_path, meta_path = _out_paths(out_dir, "correct", scn)
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["observed_db", "power_ratio", "mode", "corrected_db"])
        writer.writerow([args.observed_db, power_ratio, args.mode, repr(corrected_db)])
    write_metadata(
        meta_path, scn, "correct",
        {"observed_db": args.observed_db, "power_ratio": power_ratio, "mode": args.mode},
    )
    return csv_path


def _interfere_targets(scn: Scenario):
    cfg = scn.trace
    icfg = scn.interfere
    grid = spectrum.default_frequency_grid(icfg.band_min, icfg.band_max, scn.trace.rbw)
    squeezed = spectrum.flat_trace(icfg.squeezed_floor_db, grid, TraceLabel.SQUEEZED_QUADRATURE)
    tone = (icfg.tone_frequency, tracesim.tone_amplitude_for_db(icfg.tone_db_rel_shot, cfg))
    return squeezed, tone


def run_interfere(scn: Scenario, out_dir: Path, args) -> Path:
    cfg = scn.trace
    squeezed_target, tone = _interfere_targets(scn)
    coherent_psd = tracesim.averaged_psd(cfg, None, tone, TraceLabel.SHOT_NOISE)
    squeezed_psd = tracesim.averaged_psd(cfg, squeezed_target, tone, TraceLabel.SQUEEZED_QUADRATURE)
    csv_path, meta_path = _out_paths(out_dir, "interfere", scn)
    spectrum.write_traces_csv(csv_path, [coherent_psd, squeezed_psd])
    write_metadata(
        meta_path, scn, "interfere",
        {"tone_frequency_hz": scn.interfere.tone_frequency,
         "tone_db_rel_shot": scn.interfere.tone_db_rel_shot},
    )
    print(f"wrote coherent and squeezed reference PSDs -> {csv_path}")
    return csv_path


def run_trace(scn: Scenario, out_dir: Path, args) -> Path:
    op = scn.operating_point()
    grid = spectrum.default_frequency_grid()
    target = spectrum.detected_spectrum(op, scn.chain, grid, TraceLabel.SQUEEZED_QUADRATURE)
    psd = tracesim.averaged_psd(scn.trace, target, None, TraceLabel.SQUEEZED_QUADRATURE)
    csv_path, meta_path = _out_paths(out_dir, "trace", scn)
    spectrum.write_traces_csv(csv_path, [psd, target])
    write_metadata(meta_path, scn, "trace")
    print(f"wrote estimated and analytic spectra -> {csv_path}")
    return csv_path


def run_capacity(scn: Scenario, out_dir: Path, args) -> Path:
    cap = scn.capacity
    r = args.r if args.r is not None else cap.squeeze_r
    grid = capacity_mod.default_nbar_grid(cap.nbar_min, cap.nbar_max, cap.points)
    curves = capacity_mod.curve_suite(grid, r)
    csv_path, meta_path = _out_paths(out_dir, "capacity", scn)
    capacity_mod.write_curves_csv(csv_path, curves)
    write_metadata(meta_path, scn, "capacity", {"squeeze_r": r})
    print(f"wrote {len(curves)} capacity curves -> {csv_path}")
    return csv_path


_RUNNERS = {
    "cavity": run_cavity,
    "spectrum": run_spectrum,
    "correct": run_correct,
    "interfere": run_interfere,
    "trace": run_trace,
    "capacity": run_capacity,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="scenario file (default: built-in preset)")
    common.add_argument("--out", type=Path, default=Path("."), help="output directory")
    common.add_argument(
        "--set", action="append", default=[], metavar="KEY=VALUE",
        help="override a scenario key, e.g. --set trace.seed=7",
    )
    parser = argparse.ArgumentParser(
        prog="squeezelab",
        description="Bright phase-squeezed beam simulation and analysis toolkit",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in ("cavity", "spectrum", "interfere", "trace"):
        sub.add_parser(name, parents=[common])
    p_correct = sub.add_parser("correct", parents=[common])
    p_correct.add_argument("--observed-db", type=float, required=True)
    p_correct.add_argument("--power-ratio", type=float, default=None,
                           help="P_OPA/P_LO (default: from scenario)")
    p_correct.add_argument("--mode", choices=["blocked", "equal-power"], default="blocked")
    p_capacity = sub.add_parser("capacity", parents=[common])
    p_capacity.add_argument("--r", type=float, default=None,
                            help="squeezing parameter (default: from scenario)")
    return parser


def _collect_overrides(pairs: list[str], leftovers: list[str]) -> dict[str, object]:
    flat: dict[str, object] = {}
    for pair in pairs:
        if "=" not in pair:
            raise ScenarioError(f"--set {pair!r}: expected KEY=VALUE")
        key, _, value = pair.partition("=")
        flat[key.strip()] = scenario._parse_value(value)
    # `--section.key value` mirror syntax
    i = 0
    while i < len(leftovers):
        token = leftovers[i]
        if not (token.startswith("--") and "." in token):
            raise ScenarioError(f"unrecognized argument {token!r}")
        if "=" in token:
            key, _, value = token[2:].partition("=")
            i += 1
        else:
            if i + 1 >= len(leftovers):
                raise ScenarioError(f"missing value for {token!r}")
            key, value = token[2:], leftovers[i + 1]
            i += 2
        flat[key] = scenario._parse_value(value)
    return flat


def resolve_scenario(args, leftovers: list[str]) -> Scenario:
    if args.config is not None:
        scn = scenario.load(args.config)
    else:
        scn = scenario.paper_preset()
    overrides = _collect_overrides(args.set, leftovers)
    if overrides:
        flat = scenario.to_flat(scn)
        flat.update(overrides)
        scn = scenario.from_flat(flat)
    scn.validate()
    return scn


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args, leftovers = parser.parse_known_args(argv)
    try:
        scn = resolve_scenario(args, leftovers)
        args.out.mkdir(parents=True, exist_ok=True)
    except (ScenarioError, ValueError, OSError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    try:
        _RUNNERS[args.subcommand](scn, args.out, args)
    except (ScenarioError, ValueError) as exc:
        # value errors after validation are runtime numeric failures
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
