from unittest import TestCase

import numpy as np

from esampling import ConfigurationError, OverloadWarning
from esampling.energy import TimingPlan
from esampling.psd import UnimodalPsd
from esampling.simulation import ShapedGaussian, SimConfig, Sinusoid
from tests import small_circuit, small_harvester


def _config(input_, **kwargs):
    params = dict(
        circuit=small_circuit(),
        harvester=small_harvester(),
        plan=TimingPlan.from_hold(6.4e-11, 1e-9),
        input=input_,
        n_samples=64,
    )
    params.update(kwargs)
    return SimConfig(**params)


class TestSinusoid(TestCase):

    def test_call(self):
        # Setup
        sinusoid = Sinusoid(frequency=1.0, offset=0.5, amplitude=0.25)

        # Run
        values = sinusoid(np.array([0.0, 0.25, 0.75]))

        # Check
        np.testing.assert_allclose(values, [0.5, 0.75, 0.25])

    def test_range(self):
        """A sinusoid leaving [0, V_ref] is rejected."""
        with self.assertRaises(ConfigurationError):
            _config(Sinusoid(frequency=1e6, offset=0.5, amplitude=0.6))

    def test_full_range_accepted(self):
        config = _config(Sinusoid(frequency=1e6, offset=0.5, amplitude=0.5))

        assert config.n_samples == 64


class TestSimConfig(TestCase):

    def setUp(self):
        self.input = Sinusoid(frequency=1e6, offset=0.5, amplitude=0.1)

    def test_duration(self):
        """A duration is rounded down to whole sampling periods."""
        # Run
        config = _config(self.input, n_samples=None, duration=10.5 * 1.064e-9)

        # Check
        assert config.n_samples == 10

    def test_exactly_one_length(self):
        with self.assertRaises(ConfigurationError):
            _config(self.input, n_samples=None)

        with self.assertRaises(ConfigurationError):
            _config(self.input, duration=1e-6)

    def test_invalid(self):
        for kwargs in ({'n_samples': -1}, {'hold_substeps': 0},
                       {'n_samples': None, 'duration': -1.0}):
            with self.subTest(kwargs=kwargs):
                with self.assertRaises(ConfigurationError):
                    _config(self.input, **kwargs)


class TestShapedGaussian(TestCase):

    def test_points_per_sample(self):
        # Setup
        shaped = ShapedGaussian(UnimodalPsd(sigma_x2=0.01, f_m=3.0), oversample=4)

        # Run / Check
        assert shaped.points_per_sample(1000.0) == 4
        assert shaped.points_per_sample(0.1) > 4

    def test_prepare(self):
        """The waveform is centred at V_ref / 2 and periodic over the run."""
        # Setup
        f_s = 1.0 / 1.064e-9
        model = UnimodalPsd(sigma_x2=1e-3, f_m=f_s / 4.0)
        config = _config(ShapedGaussian(model, seed=4))

        # Run
        waveform, overloads = config.input.prepare(config)

        # Check
        times = np.linspace(0.0, 64 * 1.064e-9, 4096, endpoint=False)
        values = waveform(times)
        assert overloads == 0
        assert abs(values.mean() - 0.5) < 0.02
        assert (values >= 0.0).all() and (values <= 1.0).all()
        np.testing.assert_allclose(waveform(times + 64 * 1.064e-9), values, atol=1e-12)

    def test_overload_warning(self):
        """Clipping a loud input warns and counts the clipped acquisitions."""
        # Setup
        f_s = 1.0 / 1.064e-9
        model = UnimodalPsd(sigma_x2=1.0, f_m=f_s / 4.0)
        config = _config(ShapedGaussian(model, seed=0))

        # Run
        with self.assertWarns(OverloadWarning):
            waveform, overloads = config.input.prepare(config)

        # Check
        assert overloads > 0
        assert waveform(np.linspace(0.0, 1e-8, 100)).max() <= 1.0
