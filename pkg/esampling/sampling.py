"""Reconstruction error of uniform sampling followed by optimal linear filtering."""

import logging
from dataclasses import asdict, dataclass

import numpy as np
import pandas as pd
from scipy.stats import norm

from esampling import ArgumentError
from esampling.psd.base import (
    QUADRATURE_TOLERANCE, aliased_sum, replica_densities, truncated_density)
from esampling.psd.utils import fold_breakpoints, integrate_piecewise

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class NmseResult:
    """Sampling NMSE at one rate, reported next to the quantization floor.

    The two figures are never summed: fidelity constraints bind on ``zeta`` alone.
    """

    f_s: float
    zeta: float
    quantization_zeta: float

    def __post_init__(self):
        if not 0.0 <= self.zeta <= 1.0:
            raise ArgumentError('zeta must lie in [0, 1], got {}'.format(self.zeta))

    def to_dict(self):
        return asdict(self)


def _check_rate(f_s):
    if not f_s > 0:
        raise ArgumentError('f_s must be positive, got {}'.format(f_s))


def _captured_density(model, f_s, cutoff):
    """Build the integrand ``sum_k S_k^2 / sum_k S_k`` evaluated at a single frequency."""

    def integrand(f):
        replicas = replica_densities(model, f, f_s, cutoff)[0]
        total = replicas.sum()
        if total <= 0.0:
            return 0.0

        return float(np.dot(replicas, replicas) / total)

    return integrand


def nmse(model, f_s):
    r"""Compute the minimal NMSE of reconstructing ``model`` from samples taken at ``f_s``.

    .. math:: \zeta = 1 - \frac{1}{\sigma_x^2} \int_{-f_s/2}^{f_s/2}
        \frac{\sum_k S_x(f - k f_s)^2}{\sum_k S_x(f - k f_s)} df

    The integrand is even, so only the positive half of the baseband is integrated. When
    no replica other than the baseband one reaches the first Nyquist zone the error is
    exactly zero.

    Args:
        model (PsdModel): Spectral density of the input.
        f_s (float): Sampling frequency in Hz.

    Returns:
        float: NMSE in ``[0, 1]``.

    Raises:
        ArgumentError: if ``f_s`` is not positive.
    """
    _check_rate(f_s)
    cutoff = model.cutoff()
    half = f_s / 2.0
    if cutoff <= half:
        return 0.0

    points = fold_breakpoints(list(model.breakpoints()) + [cutoff], f_s, half)
    captured = integrate_piecewise(
        _captured_density(model, f_s, cutoff), 0.0, half, points,
        epsabs=QUADRATURE_TOLERANCE * model.sigma_x2 / 2.0
    )

    zeta = 1.0 - 2.0 * captured / model.sigma_x2
    return float(np.clip(zeta, 0.0, 1.0))


def nmse_flat_closed_form(f_m, f_s):
    """NMSE of a flat spectrum of bandwidth ``f_m`` sampled at ``f_s``."""
    if not (f_m > 0 and f_s > 0):
        raise ArgumentError('f_m and f_s must be positive')

    return max(0.0, 1.0 - f_s / (2.0 * f_m))


def reconstruction_filter_response(model, f_s, f):
    """Frequency response of the MSE-optimal reconstruction filter.

    Args:
        model (PsdModel): Spectral density of the input.
        f_s (float): Sampling frequency in Hz.
        f (float or numpy.ndarray): Frequencies in Hz.

    Returns:
        float or numpy.ndarray: ``S_x(f) / sum_k S_x(f - k f_s)``, 0 where the sum vanishes.
    """
    _check_rate(f_s)
    scalar = np.ndim(f) == 0
    f = np.atleast_1d(np.asarray(f, dtype=float))

    cutoff = model.cutoff()
    numerator = truncated_density(model, f, cutoff)
    denominator = aliased_sum(model, f, f_s, cutoff)
    gain = np.zeros(f.shape)
    positive = denominator > 0
    gain[positive] = np.clip(numerator[positive] / denominator[positive], 0.0, 1.0)

    if scalar:
        return float(gain[0])

    return gain


def quantization_nmse(n):
    """Quantization NMSE of an ``n``-bit converter, per the 6 dB-per-bit rule."""
    if n < 1:
        raise ArgumentError('n must be at least 1, got {}'.format(n))

    return 10.0 ** (-0.6 * n)


def nmse_result(model, f_s, n):
    """Bundle the sampling and quantization NMSE at ``f_s`` for an ``n``-bit converter."""
    zeta = nmse(model, f_s)
    return NmseResult(f_s=float(f_s), zeta=zeta, quantization_zeta=quantization_nmse(n))


def nmse_curve(model, f_s_grid, n=None):
    """Evaluate the sampling NMSE over a grid of rates.

    Args:
        model (PsdModel): Spectral density of the input.
        f_s_grid (Iterable[float]): Sampling frequencies in Hz.
        n (int): If given, add the quantization NMSE of an ``n``-bit converter.

    Returns:
        pandas.DataFrame: Columns ``f_s_hz``, ``zeta`` and optionally ``quantization_zeta``.
    """
    f_s_grid = np.asarray(list(f_s_grid), dtype=float)
    LOGGER.info('Computing NMSE of %r over %s rates', model, len(f_s_grid))

    frame = pd.DataFrame({
        'f_s_hz': f_s_grid,
        'zeta': [nmse(model, f_s) for f_s in f_s_grid],
    })
    if n is not None:
        frame['quantization_zeta'] = quantization_nmse(n)

    return frame


def overload_probability_bound(K):
    """Chebyshev bound on ``P(|x| >= V_ref)`` for ``V_ref = K sigma_x``."""
    if not K > 0:
        raise ArgumentError('K must be positive, got {}'.format(K))

    return min(1.0, 1.0 / K ** 2)


def gaussian_overload_probability(K):
    """Exact ``P(|x| >= K sigma_x)`` for a zero-mean Gaussian input."""
    return float(2.0 * norm.sf(K))
