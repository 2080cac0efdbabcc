import numpy as np

from esampling.psd.base import PsdModel, PsdType


class FlatPsd(PsdModel):
    """Band-limited white spectrum.

    The density equals ``sigma_x2 / (2 f_m)`` on ``[-f_m, f_m]`` and vanishes outside.
    """

    psd_type = PsdType.FLAT

    def level(self):
        """Height of the flat band in V²/Hz."""
        return self.sigma_x2 / (2.0 * self.f_m)

    def _density(self, f):
        f = np.asarray(f, dtype=float)
        return np.where(f <= self.f_m, self.level(), 0.0)

    def cutoff(self):
        return self.f_m

    def bandlimit(self):
        return self.f_m

    def breakpoints(self):
        return [self.f_m]

    def variance(self):
        return self.level() * 2.0 * self.f_m
