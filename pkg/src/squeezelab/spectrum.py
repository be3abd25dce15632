"""Analytic squeezing/antisqueezing spectrum of the below-threshold OPA.

The intracavity parametric interaction produces a negative-Lorentzian
squeezing spectrum centered at zero sideband frequency,

    S-(w) = 1 - 4x / [(1+x)^2 + (w/g)^2]   (squeezed quadrature)
    S+(w) = 1 + 4x / [(1-x)^2 + (w/g)^2]   (antisqueezed quadrature)

with x = sqrt(P_pump / P_threshold) and g the cavity half linewidth (HWHM).
The detected spectrum degrades the ideal one by cavity escape efficiency,
detection losses and residual phase jitter.
"""
from __future__ import annotations

import csv
import enum
import math
from dataclasses import dataclass, field

import numpy as np

from . import gaussian

# Fig.-2-style default analysis grid: 1-25 MHz in 30 kHz steps.
DEFAULT_GRID_START = 1e6
DEFAULT_GRID_STOP = 25e6
DEFAULT_GRID_STEP = 30e3


class TraceLabel(enum.Enum):
    SQUEEZED_QUADRATURE = "squeezed_quadrature"
    ANTISQUEEZED_QUADRATURE = "antisqueezed_quadrature"
    SHOT_NOISE = "shot_noise"
    ELECTRONIC_NOISE = "electronic_noise"


@dataclass(frozen=True)
class OpaOperatingPoint:
    """Below-threshold operating point of the parametric amplifier."""

    pump_power: float  # W
    threshold_power: float  # W
    cavity_hwhm: float  # Hz, half the cavity FWHM

    def __post_init__(self):
        if self.threshold_power <= 0.0:
            raise ValueError("threshold_power must be > 0")
        if not (0.0 <= self.pump_power < self.threshold_power):
            raise ValueError(
                "pump_power must satisfy 0 <= P_p < P_th (below-threshold), "
                f"got P_p={self.pump_power}, P_th={self.threshold_power}"
            )
        if self.cavity_hwhm <= 0.0:
            raise ValueError("cavity_hwhm must be > 0")

    @property
    def pump_ratio_x(self) -> float:
        """Normalized pump amplitude x = sqrt(P_p / P_th), in [0, 1)."""
        return math.sqrt(self.pump_power / self.threshold_power)


@dataclass(frozen=True)
class DetectionChain:
    """Loss and phase-jitter budget between the OPA output and the detector."""

    quantum_efficiency: float = 0.95
    homodyne_contrast: float = 0.96
    propagation_efficiency: float = 0.94
    escape_efficiency: float = 1.0
    phase_jitter_rms: float = 0.0  # radians

    def __post_init__(self):
        if not (0.0 < self.escape_efficiency <= 1.0):
            raise ValueError("escape_efficiency must be in (0, 1]")
        if self.phase_jitter_rms < 0.0:
            raise ValueError("phase_jitter_rms must be >= 0")
        # validates the three detection factors
        gaussian.composite_detection_efficiency(
            self.quantum_efficiency,
            self.homodyne_contrast,
            self.propagation_efficiency,
        )

    @property
    def detection_efficiency(self) -> float:
        return gaussian.composite_detection_efficiency(
            self.quantum_efficiency,
            self.homodyne_contrast,
            self.propagation_efficiency,
        )

    @property
    def total_efficiency(self) -> float:
        return self.escape_efficiency * self.detection_efficiency


@dataclass
class SpectrumTrace:
    """Frequency-indexed noise power relative to shot noise, in dB."""

    frequencies: np.ndarray
    values_db: np.ndarray
    label: TraceLabel

    def __post_init__(self):
        self.frequencies = np.asarray(self.frequencies, dtype=float)
        self.values_db = np.asarray(self.values_db, dtype=float)
        if self.frequencies.shape != self.values_db.shape:
            raise ValueError("frequencies and values_db must have equal length")
        if self.frequencies.size and np.any(np.diff(self.frequencies) <= 0):
            raise ValueError("frequencies must be strictly increasing")

    def ratio(self) -> np.ndarray:
        """Linear power ratio relative to shot noise."""
        return 10.0 ** (self.values_db / 10.0)

    def ratio_at(self, freqs) -> np.ndarray:
        """Linear ratio interpolated onto `freqs`.

        Holds the low-frequency edge value below the grid and returns to
        shot noise (ratio 1) above it.
        """
        return np.interp(np.asarray(freqs, float), self.frequencies, self.ratio(), right=1.0)

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["frequency_hz", "value_db", "label"])
            for f, v in zip(self.frequencies, self.values_db):
                writer.writerow([repr(float(f)), repr(float(v)), self.label.value])


def write_traces_csv(path, traces) -> None:
    """Write several traces into one CSV (shared schema, one row per point)."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["frequency_hz", "value_db", "label"])
        for trace in traces:
            for f, v in zip(trace.frequencies, trace.values_db):
                writer.writerow([repr(float(f)), repr(float(v)), trace.label.value])


def read_traces_csv(path) -> list[SpectrumTrace]:
    groups: dict[str, list[tuple[float, float]]] = {}
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            groups.setdefault(row["label"], []).append(
                (float(row["frequency_hz"]), float(row["value_db"]))
            )
    traces = []
    for label, points in groups.items():
        freqs, vals = zip(*points)
        traces.append(SpectrumTrace(np.array(freqs), np.array(vals), TraceLabel(label)))
    return traces


def default_frequency_grid(
    start=DEFAULT_GRID_START, stop=DEFAULT_GRID_STOP, step=DEFAULT_GRID_STEP
) -> np.ndarray:
    return np.arange(start, stop + 0.5 * step, step)


def flat_trace(level_db: float, frequencies, label=TraceLabel.SHOT_NOISE) -> SpectrumTrace:
    freqs = np.asarray(frequencies, float)
    return SpectrumTrace(freqs, np.full_like(freqs, float(level_db)), label)


def ideal_spectrum(
    op: OpaOperatingPoint, omega: float, quadrature: TraceLabel
) -> float:
    """Lossless OPA output spectrum at sideband frequency omega (Hz)."""
    x = op.pump_ratio_x
    w2 = (omega / op.cavity_hwhm) ** 2
    if quadrature is TraceLabel.SQUEEZED_QUADRATURE:
        return 1.0 - 4.0 * x / ((1.0 + x) ** 2 + w2)
    if quadrature is TraceLabel.ANTISQUEEZED_QUADRATURE:
        return 1.0 + 4.0 * x / ((1.0 - x) ** 2 + w2)
    raise ValueError(f"not an OPA quadrature: {quadrature}")


def detected_variance(op: OpaOperatingPoint, chain: DetectionChain, omega: float) -> float:
    """Detected squeezed-quadrature variance at one sideband frequency.

    Applies, in order: cavity escape efficiency, detection losses, and the
    residual phase-jitter mix with the (equally degraded) antisqueezed
    quadrature at the same frequency.
    """
    v_sq = ideal_spectrum(op, omega, TraceLabel.SQUEEZED_QUADRATURE)
    v_anti = ideal_spectrum(op, omega, TraceLabel.ANTISQUEEZED_QUADRATURE)
    esc = gaussian.LossModel(chain.escape_efficiency)
    det = gaussian.LossModel(chain.detection_efficiency)
    v_sq = gaussian.apply_loss(gaussian.apply_loss(v_sq, esc), det)
    v_anti = gaussian.apply_loss(gaussian.apply_loss(v_anti, esc), det)
    return gaussian.apply_phase_jitter(v_sq, v_anti, chain.phase_jitter_rms)


def detected_spectrum(
    op: OpaOperatingPoint,
    chain: DetectionChain,
    omega_grid=None,
    quadrature: TraceLabel = TraceLabel.SQUEEZED_QUADRATURE,
) -> SpectrumTrace:
    """Detected spectrum over a frequency grid, in dB relative to shot noise."""
    if omega_grid is None:
        omega_grid = default_frequency_grid()
    freqs = np.asarray(omega_grid, dtype=float)
    values = np.empty_like(freqs)
    for i, w in enumerate(freqs):
        if quadrature is TraceLabel.SQUEEZED_QUADRATURE:
            v = detected_variance(op, chain, w)
        elif quadrature is TraceLabel.ANTISQUEEZED_QUADRATURE:
            # jitter rotates the antisqueezed axis toward the squeezed one
            v_sq = ideal_spectrum(op, w, TraceLabel.SQUEEZED_QUADRATURE)
            v_anti = ideal_spectrum(op, w, TraceLabel.ANTISQUEEZED_QUADRATURE)
            esc = gaussian.LossModel(chain.escape_efficiency)
            det = gaussian.LossModel(chain.detection_efficiency)
            v_sq = gaussian.apply_loss(gaussian.apply_loss(v_sq, esc), det)
            v_anti = gaussian.apply_loss(gaussian.apply_loss(v_anti, esc), det)
            v = gaussian.apply_phase_jitter(v_sq, v_anti, math.pi / 2 - chain.phase_jitter_rms)
        else:
            raise ValueError(f"not an OPA quadrature: {quadrature}")
        values[i] = gaussian.ratio_to_db(v)
    return SpectrumTrace(freqs, values, quadrature)
