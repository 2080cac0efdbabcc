from unittest import TestCase

import numpy as np

from esampling.psd.utils import fold_breakpoints, integrate_piecewise


class TestFoldBreakpoints(TestCase):

    def test_fold(self):
        """Breakpoints are reflected through every multiple of the rate."""
        # Run
        result = fold_breakpoints([1.0], 1.5, 2.0)

        # Check
        np.testing.assert_allclose(result, [0.5, 1.0])

    def test_empty(self):
        assert len(fold_breakpoints([], 1.0, 2.0)) == 0


class TestIntegratePiecewise(TestCase):

    def test_step(self):
        """A jump at a known point integrates exactly."""
        # Setup
        def step(f):
            return 1.0 if f <= 1.0 else 0.0

        # Run
        result = integrate_piecewise(step, 0.0, 3.0, [1.0])

        # Check
        assert np.isclose(result, 1.0, rtol=1e-12)

    def test_empty_interval(self):
        assert integrate_piecewise(np.sin, 2.0, 1.0) == 0.0

    def test_smooth(self):
        result = integrate_piecewise(np.cos, 0.0, np.pi / 2.0)

        assert np.isclose(result, 1.0, rtol=1e-10)
