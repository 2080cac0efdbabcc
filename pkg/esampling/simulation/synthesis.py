"""Synthesis of stationary Gaussian waveforms with a prescribed spectral density."""

import logging

import numpy as np
from scipy.fft import irfft, rfft, rfftfreq

from esampling import ArgumentError, validate_random_state
from esampling.psd.base import truncated_density

LOGGER = logging.getLogger(__name__)


def spectral_amplitudes(model, n_points, dt):
    """Per-bin gains that turn unit white noise into a realization of ``model``.

    The density is sampled on the ``rfft`` bins of an ``n_points`` grid and rescaled so
    that the two-sided sum ``df * sum_k S(f_k)`` equals ``model.sigma_x2`` exactly.

    Args:
        model (PsdModel): Target spectral density.
        n_points (int): Length of the periodic realization.
        dt (float): Grid spacing in s.

    Returns:
        numpy.ndarray: Gains for each ``rfft`` bin.
    """
    if n_points < 2:
        raise ArgumentError('A realization needs at least two points')

    frequencies = rfftfreq(n_points, dt)
    df = 1.0 / (n_points * dt)
    density = truncated_density(model, frequencies)

    # bins other than DC and the even-length Nyquist bin stand for two frequencies
    weights = np.full(len(frequencies), 2.0)
    weights[0] = 1.0
    if n_points % 2 == 0:
        weights[-1] = 1.0

    power = df * np.dot(weights, density)
    if not power > 0:
        message = 'The grid (df={} Hz, f_max={} Hz) does not resolve {!r}'
        raise ArgumentError(message.format(df, frequencies[-1], model))

    density = density * model.sigma_x2 / power
    LOGGER.debug('Density rescaled by %s on a %s-point grid', model.sigma_x2 / power, n_points)
    return np.sqrt(n_points * df * density)


def shaped_noise(model, n_points, dt, amplitudes=None, random_state=None):
    """Draw one periodic realization of ``model``.

    Args:
        model (PsdModel): Target spectral density.
        n_points (int): Number of grid points.
        dt (float): Grid spacing in s.
        amplitudes (numpy.ndarray): Precomputed :func:`spectral_amplitudes`.
        random_state (int, numpy.random.Generator or None): Seed or generator to draw from.

    Returns:
        numpy.ndarray: Zero-mean samples with expected power ``model.sigma_x2``.
    """
    if amplitudes is None:
        amplitudes = spectral_amplitudes(model, n_points, dt)

    white = validate_random_state(random_state).standard_normal(n_points)
    return irfft(rfft(white) * amplitudes, n=n_points)


def synthesize(model, n_points, dt, seed=None):
    """Same as :func:`shaped_noise`, optionally under a fixed ``seed``."""
    return shaped_noise(model, n_points, dt, random_state=seed)
