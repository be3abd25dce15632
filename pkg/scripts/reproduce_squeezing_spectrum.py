#!/usr/bin/env python3
"""Regenerate the detected squeezing spectrum and its trace-level estimate.

Writes, into results/ (or the directory given as the first argument):
  * a cavity report (FSR, finesse, FWHM, threshold, escape efficiency),
  * the analytic squeezed/antisqueezed/shot-noise spectra over 1-25 MHz,
  * a synthesized-photocurrent PSD averaged over 100 sweeps next to the
    analytic target it was shaped to,
  * the shot-noise-corrected squeezing levels for both bright-beam
    calibration conventions.
"""
import sys

from squeezelab.cli import main

OUT = sys.argv[1] if len(sys.argv) > 1 else "results"

for argv in (
    ["--out", OUT, "cavity"],
    ["--out", OUT, "spectrum"],
    ["--out", OUT, "trace", "--set", "trace.seed=1"],
    ["--out", OUT, "correct", "--observed-db", "-3.75", "--mode", "blocked"],
    ["--out", OUT, "correct", "--observed-db", "-3.00", "--mode", "equal-power"],
):
    code = main(argv)
    if code != 0:
        sys.exit(code)
