import numpy as np
from scipy.stats import norm

from esampling import ArgumentError
from esampling.psd.base import GAUSSIAN_SPAN, PsdModel, PsdType


class _GaussianLobes(PsdModel):

    default_width = None

    def __init__(self, sigma_x2, f_m, sigma=None, psd_type=None):
        super().__init__(sigma_x2, f_m)
        if sigma is None:
            sigma = self.f_m * self.default_width

        if not sigma > 0:
            raise ArgumentError('sigma must be positive, got {}'.format(sigma))

        self.sigma = float(sigma)

    def _get_params(self):
        params = super()._get_params()
        params['sigma'] = self.sigma
        return params


class UnimodalPsd(_GaussianLobes):
    r"""Gaussian-shaped spectrum centred at DC.

    .. math:: S_x(f) = \alpha e^{-f^2 / 2\sigma^2}, \quad \alpha = \sigma_x^2 / \sqrt{2\pi\sigma^2}

    ``sigma`` defaults to ``f_m / 3``, which places ``f_m`` three widths away from the peak.
    """

    psd_type = PsdType.UNIMODAL
    default_width = 1.0 / 3.0

    def _density(self, f):
        return self.sigma_x2 * norm.pdf(f, scale=self.sigma)

    def cutoff(self):
        return GAUSSIAN_SPAN * self.sigma


class MultimodalPsd(_GaussianLobes):
    r"""Two Gaussian lobes centred at ``+f_m`` and ``-f_m``.

    .. math:: S_x(f) = \frac{\alpha}{2}\left(e^{-(f - f_m)^2 / 2\sigma^2}
        + e^{-(f + f_m)^2 / 2\sigma^2}\right)

    ``sigma`` defaults to ``f_m / 6``.
    """

    psd_type = PsdType.MULTIMODAL
    default_width = 1.0 / 6.0

    def _density(self, f):
        upper = norm.pdf(f, loc=self.f_m, scale=self.sigma)
        lower = norm.pdf(f, loc=-self.f_m, scale=self.sigma)
        return 0.5 * self.sigma_x2 * (upper + lower)

    def cutoff(self):
        return self.f_m + GAUSSIAN_SPAN * self.sigma

    def breakpoints(self):
        # lobe peak
        return [self.f_m]
