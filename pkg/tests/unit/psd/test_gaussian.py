from unittest import TestCase

import numpy as np

from esampling import ArgumentError
from esampling.psd import MultimodalPsd, UnimodalPsd
from esampling.psd.base import GAUSSIAN_SPAN, TRUNCATION_LEVEL


class TestUnimodalPsd(TestCase):

    def test_default_sigma(self):
        instance = UnimodalPsd(sigma_x2=1.0, f_m=3.0)

        assert instance.sigma == 1.0

    def test_invalid_sigma(self):
        with self.assertRaises(ArgumentError):
            UnimodalPsd(sigma_x2=1.0, f_m=3.0, sigma=0.0)

    def test_density(self):
        # Setup
        instance = UnimodalPsd(sigma_x2=2.0, f_m=3.0, sigma=1.0)
        expected = 2.0 * np.exp(-np.array([0.0, 1.0, 2.0]) ** 2 / 2.0) / np.sqrt(2.0 * np.pi)

        # Run
        result = instance.density(np.array([0.0, 1.0, -2.0]))

        # Check
        np.testing.assert_allclose(result, expected, rtol=1e-12)

    def test_cutoff(self):
        """The density at the cutoff is TRUNCATION_LEVEL times the peak."""
        # Setup
        instance = UnimodalPsd(sigma_x2=1.0, f_m=3.0)

        # Run
        ratio = instance.density(instance.cutoff()) / instance.peak()

        # Check
        assert np.isclose(instance.cutoff(), GAUSSIAN_SPAN)
        assert np.isclose(ratio, TRUNCATION_LEVEL, rtol=1e-6)

    def test_variance(self):
        instance = UnimodalPsd(sigma_x2=0.032, f_m=19.8e6)

        assert np.isclose(instance.variance(), 0.032, rtol=1e-8)

    def test_no_bandlimit(self):
        assert UnimodalPsd(sigma_x2=1.0, f_m=3.0).bandlimit() is None


class TestMultimodalPsd(TestCase):

    def test_default_sigma(self):
        instance = MultimodalPsd(sigma_x2=1.0, f_m=6.0)

        assert instance.sigma == 1.0

    def test_peak_at_f_m(self):
        # Setup
        instance = MultimodalPsd(sigma_x2=1.0, f_m=6.0)

        # Run
        at_peak = instance.density(6.0)
        at_dc = instance.density(0.0)

        # Check
        assert np.isclose(at_peak, 0.5 / np.sqrt(2.0 * np.pi), rtol=1e-9)
        assert at_dc < 1e-7
        assert np.isclose(instance.peak(), at_peak)

    def test_cutoff(self):
        instance = MultimodalPsd(sigma_x2=1.0, f_m=6.0)

        assert np.isclose(instance.cutoff(), 6.0 + GAUSSIAN_SPAN)

    def test_variance(self):
        instance = MultimodalPsd(sigma_x2=0.032, f_m=19.8e6)

        assert np.isclose(instance.variance(), 0.032, rtol=1e-8)

    def test_to_dict(self):
        # Run
        params = MultimodalPsd(sigma_x2=1.0, f_m=6.0, sigma=2.0).to_dict()

        # Check
        assert params['sigma'] == 2.0
        assert params['type'] == 'esampling.psd.gaussian.MultimodalPsd'
