#!/usr/bin/env python3
"""Regenerate the Gaussian channel-capacity curves versus mean photon number.

Writes all four bounds (coherent encoding, coherent encoding with squeezed
detection, squeezed encoding, Holevo) over nbar in [0.01, 10] for the
operating squeezing parameter r = 0.3776, plus an unsqueezed r = 0 suite
for comparison.  Output CSVs land in results/ (or the directory given as
the first argument).
"""
import sys

from squeezelab.cli import main

OUT = sys.argv[1] if len(sys.argv) > 1 else "results"

for argv in (
    ["--out", OUT, "capacity"],
    ["--out", OUT, "capacity", "--set", "capacity.squeeze_r=0.0"],
):
    code = main(argv)
    if code != 0:
        sys.exit(code)
