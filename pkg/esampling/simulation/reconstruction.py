"""Linear reconstruction of sampled sequences on a finer time grid."""

import logging

import numpy as np
from scipy.fft import fft, fftfreq, ifft

from esampling import ArgumentError, validate_random_state
from esampling.sampling import reconstruction_filter_response
from esampling.simulation.synthesis import shaped_noise, spectral_amplitudes

LOGGER = logging.getLogger(__name__)


def ideal_lowpass(f, f_s):
    """Brick-wall response at ``f_s / 2``, halved on the edge itself."""
    f = np.abs(np.asarray(f, dtype=float))
    edge = f_s / 2.0
    return np.where(np.isclose(f, edge, rtol=1e-12, atol=0.0), 0.5, (f < edge).astype(float))


def reconstruct_samples(samples, f_s, oversample=16, model=None, response=None):
    """Interpolate a periodic sample sequence by ``oversample``.

    The samples are zero-stuffed onto the fine grid and filtered in the frequency domain
    with the optimal response for ``model``, or with an ideal lowpass at ``f_s / 2`` when
    no model is given.

    Args:
        samples (numpy.ndarray): Samples taken every ``1 / f_s``.
        f_s (float): Sampling rate in Hz.
        oversample (int): Fine-grid points per sampling period.
        model (PsdModel): Spectrum of the sampled process.
        response (numpy.ndarray): Precomputed response on the ``fftfreq`` bins of the fine
            grid; overrides ``model``.

    Returns:
        numpy.ndarray: ``len(samples) * oversample`` values, the first one aligned with
        the first sample.
    """
    samples = np.asarray(samples, dtype=float)
    if samples.size == 0:
        raise ArgumentError('Nothing to reconstruct')

    if oversample < 1:
        raise ArgumentError('oversample must be at least 1, got {}'.format(oversample))

    size = samples.size * oversample
    if response is None:
        frequencies = fftfreq(size, 1.0 / (f_s * oversample))
        if model is None:
            response = ideal_lowpass(frequencies, f_s)
        else:
            response = reconstruction_filter_response(model, f_s, frequencies)

    stuffed = np.zeros(size)
    stuffed[::oversample] = samples
    return np.real(ifft(oversample * response * fft(stuffed)))


def reconstruct(trace, model=None, oversample=16):
    """Reconstruct the input of a simulated run from its output codes.

    With a ``model`` the optimal filter acts on the deviation from ``V_ref / 2``, the
    mean the shaped inputs are centred on.

    Returns:
        tuple[numpy.ndarray, numpy.ndarray]: Fine-grid times in s and values in V.
    """
    values = trace.code_voltages()
    offset = 0.0 if model is None else trace.V_ref / 2.0
    signal = reconstruct_samples(values - offset, trace.f_s, oversample, model) + offset

    start = trace.time[0] - trace.T_s + trace.T_aq
    times = start + trace.T_s / oversample * np.arange(signal.size)
    return times, signal


def empirical_nmse(model, f_s, realizations=100, n_samples=256, oversample=32, seed=0):
    """Monte-Carlo estimate of the reconstruction NMSE of sampling ``model`` at ``f_s``.

    Each realization is a periodic shaped-Gaussian record on a grid fine enough to hold
    the spectrum up to its cutoff. It is sampled every ``oversample`` points and rebuilt
    with the optimal filter, and the squared error is averaged over the record.

    Returns:
        tuple[float, float]: Mean NMSE and its standard error.
    """
    if realizations < 2:
        raise ArgumentError('At least two realizations are needed for a standard error')

    points = max(int(oversample), int(np.ceil(2.0 * model.cutoff() / f_s)) + 1)
    size = n_samples * points
    dt = 1.0 / (f_s * points)
    amplitudes = spectral_amplitudes(model, size, dt)
    response = reconstruction_filter_response(model, f_s, fftfreq(size, dt))

    LOGGER.info('Estimating NMSE of %r at %s Hz over %s realizations',
                model, f_s, realizations)

    errors = np.empty(realizations)
    random_state = validate_random_state(seed)
    for index in range(realizations):
        x = shaped_noise(model, size, dt, amplitudes, random_state)
        estimate = reconstruct_samples(x[::points], f_s, points, response=response)
        errors[index] = np.mean((x - estimate) ** 2) / model.sigma_x2

    mean = float(errors.mean())
    standard_error = float(errors.std(ddof=1) / np.sqrt(realizations))
    LOGGER.debug('Empirical NMSE %s +- %s', mean, standard_error)
    return mean, standard_error
