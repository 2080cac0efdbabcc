from unittest import TestCase

import numpy as np

from esampling.psd import FlatPsd, PsdModel


class TestFlatPsd(TestCase):

    def setUp(self):
        self.instance = FlatPsd(sigma_x2=0.032, f_m=19.8e6)

    def test_level(self):
        assert np.isclose(self.instance.level(), 0.032 / 39.6e6, rtol=1e-15)

    def test_density(self):
        """The band edge belongs to the band."""
        # Setup
        level = self.instance.level()

        # Run
        result = self.instance.density(np.array([0.0, 19.8e6, 19.8e6 * 1.001, 40e6]))

        # Check
        np.testing.assert_array_equal(result, [level, level, 0.0, 0.0])

    def test_bandlimit(self):
        assert self.instance.bandlimit() == 19.8e6
        assert self.instance.cutoff() == 19.8e6
        assert self.instance.breakpoints() == [19.8e6]

    def test_variance(self):
        """The quadrature of the base class agrees with the exact power."""
        # Run
        exact = self.instance.variance()
        numerical = PsdModel.variance(self.instance)

        # Check
        assert np.isclose(exact, 0.032, rtol=1e-12)
        assert np.isclose(numerical, 0.032, rtol=1e-9)

    def test_peak(self):
        assert self.instance.peak() == self.instance.level()
