"""Simulation and analysis toolkit for a bright phase-squeezed OPA beam."""

from . import capacity, cavity, cli, eom, gaussian, homodyne, scenario, spectrum, tracesim

__all__ = [
    "capacity",
    "cavity",
    "cli",
    "eom",
    "gaussian",
    "homodyne",
    "scenario",
    "spectrum",
    "tracesim",
]

__version__ = "0.1.0"
