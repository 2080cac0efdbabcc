"""Configuration of a time-domain simulation run."""

import logging
import warnings
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from esampling import ConfigurationError, OverloadWarning
from esampling.energy import AdcCircuitParams, HarvesterParams, TimingPlan
from esampling.psd import PsdModel
from esampling.simulation.synthesis import synthesize

LOGGER = logging.getLogger(__name__)

#: Default number of RC updates per hold window.
HOLD_SUBSTEPS = 16

#: Tolerance, in V, when checking that a sinusoid stays inside ``[0, V_ref]``.
RANGE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class Sinusoid:
    """Input ``offset + amplitude * sin(2 pi frequency t + phase)``."""

    frequency: float
    offset: float
    amplitude: float
    phase: float = 0.0

    def __call__(self, t):
        phase = 2.0 * np.pi * self.frequency * np.asarray(t, dtype=float) + self.phase
        return self.offset + self.amplitude * np.sin(phase)

    def check_range(self, V_ref):
        low = self.offset - abs(self.amplitude)
        high = self.offset + abs(self.amplitude)
        if low < -RANGE_TOLERANCE or high > V_ref + RANGE_TOLERANCE:
            message = 'Sinusoid spans [{}, {}] V, outside the [0, {}] V input range'
            raise ConfigurationError(message.format(low, high, V_ref))

    def prepare(self, config):
        return self, 0


@dataclass(frozen=True)
class ShapedGaussian:
    """Stationary Gaussian input with spectrum ``model``, centred at ``V_ref / 2``.

    The realization is periodic over the simulated duration and synthesized on a grid
    ``oversample`` times finer than the sampling rate (more if the spectrum needs it),
    aligned so that every acquisition instant falls on a grid point.
    """

    model: PsdModel
    seed: int = 0
    oversample: int = 32

    def points_per_sample(self, f_s):
        needed = int(np.ceil(2.0 * self.model.cutoff() / f_s)) + 1
        return max(self.oversample, needed)

    def prepare(self, config):
        """Synthesize the waveform and clip it to the input range.

        Returns:
            tuple[callable, int]: Waveform and the number of clipped acquisitions.
        """
        plan = config.plan
        V_ref = config.circuit.V_ref
        points = self.points_per_sample(plan.f_s)
        n_points = max(config.n_samples, 1) * points
        dt = plan.T_s / points

        values = synthesize(self.model, n_points, dt, seed=self.seed) + V_ref / 2.0
        overloads = int(np.count_nonzero((values[::points] < 0.0) | (values[::points] > V_ref)))
        if overloads:
            message = '{} of {} samples clipped to [0, {}] V'.format(
                overloads, config.n_samples, V_ref)
            LOGGER.warning(message)
            warnings.warn(message, OverloadWarning)

        values = np.clip(values, 0.0, V_ref)
        grid = plan.T_aq + dt * np.arange(n_points)
        period = n_points * dt

        def waveform(t):
            return np.interp(t, grid, values, period=period)

        return waveform, overloads


@dataclass(frozen=True)
class SimConfig:
    """Everything a simulation run needs.

    Exactly one of ``n_samples`` and ``duration`` must be given; a duration is rounded
    down to a whole number of sampling periods.
    """

    circuit: AdcCircuitParams
    harvester: HarvesterParams
    plan: TimingPlan
    input: Union[Sinusoid, ShapedGaussian]
    n_samples: Optional[int] = None
    duration: Optional[float] = None
    hold_substeps: int = HOLD_SUBSTEPS

    def __post_init__(self):
        if (self.n_samples is None) == (self.duration is None):
            raise ConfigurationError('Give exactly one of n_samples and duration')

        if self.duration is not None:
            if self.duration < 0:
                raise ConfigurationError('duration must be non-negative')

            object.__setattr__(self, 'n_samples', int(np.floor(self.duration * self.plan.f_s)))

        if self.n_samples < 0:
            raise ConfigurationError('n_samples must be non-negative')

        if self.hold_substeps < 1:
            raise ConfigurationError('hold_substeps must be at least 1')

        if isinstance(self.input, Sinusoid):
            self.input.check_range(self.circuit.V_ref)
