from unittest import TestCase

import numpy as np

from esampling import ArgumentError
from esampling.optimize import bisect


class TestBisect(TestCase):

    def test_uniform(self):
        """Find the edge of a line."""
        N = 100
        target = np.random.random(size=N)

        def _f(x):
            return x - target

        x = bisect(_f, np.zeros(shape=N), np.ones(shape=N))
        assert np.abs(x - target).max() < 1e-6

    def test_polynomial(self):
        """Find the edge of a polynomial."""
        def _f(x):
            return np.power(x - 10.0, 3.0)

        x = bisect(_f, np.array([0.0]), np.array([100.0]))
        assert np.abs(x - 10.0).max() < 1e-6

    def test_returns_feasible_end(self):
        """The returned point is always feasible."""
        def _f(x):
            return x - np.sqrt(2.0)

        x = bisect(_f, 0.0, 2.0)
        assert _f(x)[0] <= 0.0
        assert abs(x[0] - np.sqrt(2.0)) < 1e-8

    def test_plateau(self):
        """On a plateau at zero the right end of the plateau is returned."""
        def _f(x):
            return np.where(x <= 3.0, 0.0, 1.0)

        x = bisect(_f, 0.0, 10.0, rtol=1e-12)
        assert abs(x[0] - 3.0) < 1e-9

    def test_not_a_bracket(self):
        """An interval that does not bracket the edge raises ArgumentError."""
        def _f(x):
            return x - 5.0

        with self.assertRaises(ArgumentError):
            bisect(_f, 6.0, 10.0)

        with self.assertRaises(ArgumentError):
            bisect(_f, 0.0, 4.0)
