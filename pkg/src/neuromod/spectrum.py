"""One-sided power spectra of recorded orbits and a coarse orbit classifier.

The classifier is deliberately spectral: it looks only at where the power
sits, not at state-space geometry, so period-p locking is recognized by
power concentrating on the harmonic comb f = m/p and quasiperiodic motion
by multiple incommensurate narrow peaks.
"""

from dataclasses import dataclass, replace

import numpy as np

from .errors import ValidationError
from .maps import orbit

FIXED_POINT = "fixed_point"
PERIODIC = "periodic"
QUASIPERIODIC = "quasiperiodic"
BROADBAND = "broadband"

MAX_PERIOD = 32
DEFAULT_N = 4096
DEFAULT_TRANSIENT = 1000

_SILENCE = 1e-16  # per-sample energy below this reads as a fixed point
_PEAK_REL = 1e-6  # bins below this fraction of the max are noise floor
_NEIGHBORHOOD = 3  # Hann main lobe half-width, plus one bin of slack
_HARMONIC_FRACTION = 0.95
_PEAK_FRACTION = 0.90


@dataclass(frozen=True)
class SpectrumResult:
    frequencies: np.ndarray  # cycles per iteration, 0 .. 0.5
    power: np.ndarray
    classification: str = None  # None until classified
    period: object = None  # int for periodic, else None
    dominant_peaks: tuple = ()  # (frequency, power) pairs, strongest first
    confidence: float = None

    def label(self):
        if self.classification == PERIODIC:
            return f"periodic({self.period})"
        return self.classification


def power_spectrum(samples, n=DEFAULT_N):
    """One-sided power spectrum of the last n samples.

    Mean is removed and a Hann window applied before the transform. The
    normalization makes power.sum() equal the windowed signal's energy
    (one-sided, interior bins doubled), which is what the tests pin down.
    """
    _check_n(n)
    samples = np.asarray(samples, dtype=float)
    if samples.ndim != 1:
        raise ValidationError("samples must be one-dimensional")
    if len(samples) < n:
        raise ValidationError(f"need at least {n} samples, got {len(samples)}")
    v = samples[-n:]
    v = (v - v.mean()) * np.hanning(n)
    spec = np.fft.rfft(v)
    power = (spec.real ** 2 + spec.imag ** 2) / n
    power[1:-1] *= 2.0
    freqs = np.arange(n // 2 + 1) / n
    return SpectrumResult(freqs, power)


def _check_n(n):
    if n < 16 or (n & (n - 1)) != 0:
        raise ValidationError("n must be a power of two, at least 16", field="n")


def _peak_groups(power):
    """Significant bins merged into groups no more than _NEIGHBORHOOD apart.

    Returns (groups, covered_fraction) where each group is the index of its
    strongest bin.
    """
    total = float(power.sum())
    sig = np.flatnonzero(power >= _PEAK_REL * power.max())
    groups = []
    mask = np.zeros(len(power), dtype=bool)
    start = prev = int(sig[0])
    for idx in sig[1:]:
        idx = int(idx)
        if idx - prev > _NEIGHBORHOOD:
            groups.append((start, prev))
            start = idx
        prev = idx
    groups.append((start, prev))
    tops = []
    for lo, hi in groups:
        a = max(0, lo - _NEIGHBORHOOD)
        b = min(len(power), hi + _NEIGHBORHOOD + 1)
        mask[a:b] = True
        tops.append(lo + int(np.argmax(power[lo:hi + 1])))
    covered = float(power[mask].sum()) / total
    tops.sort(key=lambda i: -power[i])
    return tops, covered


def _classify_power(freqs, power, n):
    total = float(power.sum())
    if total < _SILENCE * n:
        return FIXED_POINT, None, (), 1.0

    dominant = int(np.argmax(power))
    for p in range(2, MAX_PERIOD + 1):
        bins = sorted({int(round(n * m / p)) for m in range(1, p // 2 + 1)})
        if min(abs(dominant - b) for b in bins) > 1:
            continue  # strongest peak off the comb: not this period
        mask = np.zeros(len(power), dtype=bool)
        for b in bins:
            mask[max(0, b - _NEIGHBORHOOD):b + _NEIGHBORHOOD + 1] = True
        frac = float(power[mask].sum()) / total
        if frac >= _HARMONIC_FRACTION:
            tops, _ = _peak_groups(power)
            peaks = tuple((float(freqs[i]), float(power[i])) for i in tops[:8])
            return PERIODIC, p, peaks, frac

    tops, covered = _peak_groups(power)
    peaks = tuple((float(freqs[i]), float(power[i])) for i in tops[:8])
    if len(tops) >= 2 and covered >= _PEAK_FRACTION:
        return QUASIPERIODIC, None, peaks, covered
    return BROADBAND, None, peaks, 1.0 - covered


def classify_samples(samples, n=DEFAULT_N):
    raw = power_spectrum(samples, n)
    kind, period, peaks, conf = _classify_power(raw.frequencies, raw.power, n)
    return replace(raw, classification=kind, period=period, dominant_peaks=peaks, confidence=conf)


def classify_orbit(params, state0, transient=DEFAULT_TRANSIENT, n=DEFAULT_N):
    """Iterate the map past the transient, record n states, classify x(t)."""
    _check_n(n)
    if transient < 0:
        raise ValidationError("transient must be >= 0", field="transient")
    states = orbit(params, state0, transient, n)
    xs = states if states.ndim == 1 else states[:, 0]
    return classify_samples(xs, n)
