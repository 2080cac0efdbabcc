"""FFT-based dynamic performance of converted sequences."""

import logging
from dataclasses import dataclass

import numpy as np
import pandas as pd
from scipy.fft import rfft, rfftfreq
from scipy.signal import get_window

from esampling import ArgumentError

LOGGER = logging.getLogger(__name__)

#: Bins on each side of the tone counted as signal when a window is applied.
LEAKAGE_BINS = 3

#: Floor applied before taking logarithms of the spectrum.
MAGNITUDE_FLOOR = 1e-20


@dataclass(frozen=True)
class SndrResult:
    """Outcome of an SNDR measurement.

    Attributes:
        sndr_db (float): Signal to noise-and-distortion ratio over the first Nyquist zone.
        signal_bin (int): FFT bin of the tone.
        n_fft (int): Transform length.
        spectrum (pandas.DataFrame): Columns ``freq_hz`` and ``magnitude_dbfs``.
    """

    sndr_db: float
    signal_bin: int
    n_fft: int
    spectrum: pd.DataFrame

    @property
    def enob(self):
        return (self.sndr_db - 1.76) / 6.02

    @property
    def processing_gain_db(self):
        return 10.0 * np.log10(self.n_fft / 2.0)

    @property
    def noise_floor_gap_db(self):
        """Distance between the tone and the average per-bin noise level."""
        return self.sndr_db + self.processing_gain_db

    def to_dict(self):
        return {
            'sndr_db': self.sndr_db,
            'enob': self.enob,
            'noise_floor_gap_db': self.noise_floor_gap_db,
            'signal_bin': self.signal_bin,
            'n_fft': self.n_fft,
        }


def coherent_frequency(f_target, f_s, n_fft):
    """Move ``f_target`` to the nearest odd bin of an ``n_fft``-point transform.

    An odd bin count makes the tone visit ``n_fft`` distinct phases, so the
    quantization error spreads over the spectrum instead of piling into harmonics.
    """
    if n_fft < 4:
        raise ArgumentError('n_fft must be at least 4, got {}'.format(n_fft))

    cycles = f_target * n_fft / f_s
    odd = 2 * int(np.floor(cycles / 2.0)) + 1
    if abs(odd + 2 - cycles) < abs(odd - cycles):
        odd += 2

    odd = int(np.clip(odd, 1, n_fft // 2 - 1))
    return odd * f_s / n_fft


def _one_sided_weights(n_fft):
    weights = np.full(n_fft // 2 + 1, 2.0)
    weights[0] = 1.0
    if n_fft % 2 == 0:
        weights[-1] = 1.0

    return weights


def sndr_from_samples(samples, f_s, n_fft=None, window=None, full_scale=None,
                      signal_bin=None):
    """Measure the SNDR of a single-tone sequence.

    Args:
        samples (numpy.ndarray): Sequence, in V. The last ``n_fft`` values are used.
        f_s (float): Sampling rate in Hz.
        n_fft (int): Transform length; all samples when ``None``.
        window (str or tuple): Any ``scipy.signal.get_window`` name. Rectangular when
            ``None``, which requires coherent sampling.
        full_scale (float): Peak-to-peak full scale in V for the dBFS spectrum; the
            peak-to-peak of the sequence when ``None``.
        signal_bin (int): Tone bin; the largest non-DC bin when ``None``.

    Returns:
        SndrResult
    """
    samples = np.asarray(samples, dtype=float)
    if n_fft is None:
        n_fft = len(samples)

    if n_fft < 4 or len(samples) < n_fft:
        message = 'Need at least n_fft={} samples (and n_fft >= 4), got {}'
        raise ArgumentError(message.format(n_fft, len(samples)))

    segment = samples[-n_fft:]
    segment = segment - segment.mean()
    if window is None:
        taper = np.ones(n_fft)
        leakage = 0
    else:
        taper = get_window(window, n_fft)
        leakage = LEAKAGE_BINS

    magnitudes = np.abs(rfft(segment * taper))
    power = _one_sided_weights(n_fft) * magnitudes ** 2
    if signal_bin is None:
        signal_bin = int(np.argmax(power[1:])) + 1

    low = max(1, signal_bin - leakage)
    high = min(len(power), signal_bin + leakage + 1)
    in_signal = np.zeros(len(power), dtype=bool)
    in_signal[low:high] = True
    in_signal[:leakage + 1] = False

    excluded = np.zeros(len(power), dtype=bool)
    excluded[:leakage + 1] = True
    excluded |= in_signal

    signal = power[in_signal].sum()
    noise = power[~excluded].sum()
    if noise > 0:
        sndr_db = float(10.0 * np.log10(signal / noise))
    else:
        sndr_db = np.inf

    if full_scale is None:
        full_scale = np.ptp(samples[-n_fft:])

    coherent_gain = taper.mean()
    amplitude = 2.0 * magnitudes / (n_fft * coherent_gain)
    amplitude[0] /= 2.0
    reference = full_scale / 2.0 if full_scale > 0 else 1.0
    magnitude = 20.0 * np.log10(np.maximum(amplitude / reference, MAGNITUDE_FLOOR))
    spectrum = pd.DataFrame({
        'freq_hz': rfftfreq(n_fft, 1.0 / f_s),
        'magnitude_dbfs': magnitude,
    })

    LOGGER.debug('SNDR %s dB, tone in bin %s of %s', sndr_db, signal_bin, n_fft)
    return SndrResult(sndr_db, signal_bin, n_fft, spectrum)


def sndr_fft(trace, n_fft=1024, window=None):
    """SNDR of a simulated run, from the mid-step voltages of its output codes.

    The spectrum is referenced to a ``V_ref`` peak-to-peak full scale.
    """
    if len(trace) < n_fft:
        message = 'Trace has {} samples, fewer than n_fft={}'
        raise ArgumentError(message.format(len(trace), n_fft))

    return sndr_from_samples(trace.code_voltages(), trace.f_s, n_fft=n_fft, window=window,
                             full_scale=trace.V_ref)
