"""Energy versus fidelity tradeoff of harvesting during the hold phase.

Both constrained problems reduce to a one-dimensional search over the sampling interval:
the energy ratio grows with ``T_s`` while, for lowpass spectra, the sampling NMSE never
decreases with it. Bandpass spectra such as the multimodal one fold without overlap at some
rates below Nyquist, so their NMSE is not monotone and the solvers only return a local
optimum: the fastest admissible rate, or the first edge reached from ``T_aq``.
"""

import logging
import warnings
from dataclasses import asdict, dataclass

import numpy as np
import pandas as pd
from scipy.optimize import brentq

from esampling import ArgumentError, InfeasibleError, to_decibels
from esampling.energy import (
    EfficiencyMode, acquisition_time, check_signal_power, harvested_energy, hold_energy)
from esampling.optimize import bisect
from esampling.sampling import nmse

LOGGER = logging.getLogger(__name__)

#: Largest sampling interval searched, in multiples of the Nyquist interval or of ``T_aq``.
CEILING_FACTOR = 1e4

CURVE_COLUMNS = ('f_s_hz', 'T_s_s', 'zeta', 'e_ratio_db', 'e_h_j', 'e_hold_j')


@dataclass(frozen=True)
class TradeoffPoint:
    """One operating point: a sampling rate with its NMSE and per-sample energies."""

    f_s: float
    T_s: float
    zeta: float
    E_ratio_db: float
    E_h: float
    E_hold: float

    def to_dict(self):
        return asdict(self)

    def to_row(self):
        return dict(zip(CURVE_COLUMNS, (
            self.f_s, self.T_s, self.zeta, self.E_ratio_db, self.E_h, self.E_hold)))


class _Problem:
    """Quantities shared by every evaluation for a given input, circuit and harvester."""

    def __init__(self, model, circuit, harvester, dac_n_factor=False):
        check_signal_power(circuit, model.sigma_x2)
        self.model = model
        self.circuit = circuit
        self.harvester = harvester
        self.T_aq = acquisition_time(circuit)
        self.budget = hold_energy(circuit, dac_n_factor)

    @property
    def sigma_x2(self):
        return self.model.sigma_x2

    @property
    def consumed(self):
        """``a2 K^2 sigma_x^2 + a1 K sigma_x``."""
        K = self.circuit.K
        sigma_x2 = self.sigma_x2
        return self.budget.a2 * K ** 2 * sigma_x2 + self.budget.a1 * K * np.sqrt(sigma_x2)

    def harvested(self, T_h):
        if T_h <= 0:
            return 0.0

        eta = self.harvester.efficiency(T_h)
        return harvested_energy(T_h, eta, self.harvester.R_h, self.sigma_x2)

    def zeta(self, T_s):
        return nmse(self.model, 1.0 / T_s)

    def point(self, T_s, zeta=None):
        T_h = max(T_s - self.T_aq, 0.0)
        E_h = self.harvested(T_h)
        consumed = self.consumed
        ratio = E_h / consumed if consumed > 0 else np.inf
        if zeta is None:
            zeta = self.zeta(T_s)

        return TradeoffPoint(
            f_s=1.0 / T_s,
            T_s=T_s,
            zeta=zeta,
            E_ratio_db=to_decibels(ratio),
            E_h=E_h,
            E_hold=consumed,
        )

    def hold_for_ratio(self, delta):
        """Shortest hold window whose harvested energy reaches ``delta`` times the consumption."""
        target = delta * self.consumed
        if target <= 0:
            return 0.0

        harvester = self.harvester
        if harvester.efficiency_mode is EfficiencyMode.FIXED:
            if harvester.eta <= 0:
                raise InfeasibleError('A harvester with zero efficiency cannot reach delta > 0')

            return target * harvester.R_h / (harvester.eta * self.sigma_x2)

        saturation = 0.5 * harvester.C_EH * self.sigma_x2
        if target >= saturation:
            message = 'delta = {} needs {} J per sample but C_EH saturates at {} J'
            raise InfeasibleError(message.format(delta, target, saturation))

        upper = harvester.time_constant
        while self.harvested(upper) < target:
            upper *= 2.0

        return brentq(
            lambda T_h: self.harvested(T_h) - target, 0.0, upper,
            xtol=upper * 1e-15, rtol=4 * np.finfo(float).eps
        )

    def ceiling(self):
        edge = self.model.bandlimit()
        if edge is not None:
            return CEILING_FACTOR / (2.0 * edge)

        if self.T_aq > 0:
            return CEILING_FACTOR * self.T_aq

        return CEILING_FACTOR / (2.0 * self.model.cutoff())


def min_nmse_under_energy(model, circuit, harvester, delta, dac_n_factor=False):
    """Minimal sampling NMSE subject to ``E_ratio >= delta``.

    The energy constraint fixes the shortest admissible hold window ``T_h(delta)``;
    sampling as fast as that window allows, ``f_s = 1 / (T_aq + T_h(delta))``, is optimal
    because the NMSE never increases with the sampling rate.

    Args:
        model (PsdModel): Input spectrum, with ``sigma_x2 = (V_ref / K)^2``.
        circuit (AdcCircuitParams): Converter constants.
        harvester (HarvesterParams): Harvesting branch.
        delta (float): Linear energy ratio to guarantee.
        dac_n_factor (bool): Use the DAC grouping with an extra factor ``n``.

    Returns:
        TradeoffPoint: Achieving operating point.

    Raises:
        ArgumentError: if ``delta`` is negative.
        InfeasibleError: if the harvester can never collect enough energy.
    """
    if delta < 0:
        raise ArgumentError('delta must be non-negative, got {}'.format(delta))

    problem = _Problem(model, circuit, harvester, dac_n_factor)
    T_h = problem.hold_for_ratio(delta)
    T_s = problem.T_aq + T_h
    if T_s <= 0:
        raise InfeasibleError('Acquisition and hold times are both zero')

    LOGGER.info('Minimal NMSE under delta=%s: T_h=%s s, f_s=%s Hz', delta, T_h, 1.0 / T_s)
    return problem.point(T_s)


def max_ratio_under_fidelity(model, circuit, harvester, epsilon, ceiling=None,
                             dac_n_factor=False):
    """Maximal energy ratio subject to ``zeta <= epsilon``.

    The longest sampling interval with an NMSE of at most ``epsilon`` is found by bisection
    on the non-decreasing map ``T_s -> zeta``. For a band-limited input and
    ``epsilon = 0`` it is the Nyquist interval ``1 / (2 f_m)``.

    Args:
        model (PsdModel): Input spectrum.
        circuit (AdcCircuitParams): Converter constants.
        harvester (HarvesterParams): Harvesting branch.
        epsilon (float): NMSE bound in ``[0, 1)``.
        ceiling (float): Longest sampling interval searched, in s. Defaults to
            ``CEILING_FACTOR`` Nyquist intervals, or ``CEILING_FACTOR * T_aq`` for inputs
            without a bandlimit.
        dac_n_factor (bool): Use the DAC grouping with an extra factor ``n``.

    Returns:
        TradeoffPoint: Achieving operating point.

    Raises:
        ArgumentError: if ``epsilon`` lies outside ``[0, 1)``.
        InfeasibleError: if no sampling interval longer than ``T_aq`` meets ``epsilon``.
    """
    if not 0.0 <= epsilon < 1.0:
        raise ArgumentError('epsilon must lie in [0, 1), got {}'.format(epsilon))

    problem = _Problem(model, circuit, harvester, dac_n_factor)
    T_aq = problem.T_aq
    edge = model.bandlimit()
    if epsilon == 0 and edge is not None:
        T_s = 1.0 / (2.0 * edge)
        if T_s <= T_aq:
            message = 'Nyquist interval {} s is not longer than T_aq = {} s'
            raise InfeasibleError(message.format(T_s, T_aq))

        return problem.point(T_s, zeta=0.0)

    ceiling = problem.ceiling() if ceiling is None else ceiling
    lower = T_aq * (1.0 + 1e-9) if T_aq > 0 else 1.0 / (4.0 * model.cutoff())
    if problem.zeta(lower) > epsilon:
        message = 'NMSE {} at the fastest rate {} Hz already exceeds epsilon = {}'
        raise InfeasibleError(message.format(problem.zeta(lower), 1.0 / lower, epsilon))

    upper = 2.0 * lower
    while upper < ceiling and problem.zeta(upper) <= epsilon:
        lower = upper
        upper *= 2.0

    if upper >= ceiling:
        upper = ceiling
        if problem.zeta(ceiling) <= epsilon:
            message = 'epsilon = {} is met up to the T_s ceiling {} s; reporting the ceiling'
            LOGGER.warning(message.format(epsilon, ceiling))
            warnings.warn(message.format(epsilon, ceiling), RuntimeWarning)
            return problem.point(ceiling)

    def excess(T_s):
        return np.array([problem.zeta(value) for value in T_s]) - epsilon

    T_s = float(bisect(excess, lower, upper)[0])
    LOGGER.info('Maximal ratio under epsilon=%s: T_s=%s s', epsilon, T_s)
    return problem.point(T_s)


def tradeoff_curve(model, circuit, harvester, f_s_grid, dac_n_factor=False):
    """Evaluate operating points along a decreasing grid of sampling rates.

    Args:
        model (PsdModel): Input spectrum.
        circuit (AdcCircuitParams): Converter constants.
        harvester (HarvesterParams): Harvesting branch.
        f_s_grid (Iterable[float]): Strictly decreasing sampling frequencies in Hz.
        dac_n_factor (bool): Use the DAC grouping with an extra factor ``n``.

    Returns:
        list[TradeoffPoint]: One point per grid entry, in grid order.

    Raises:
        ArgumentError: if the grid is not strictly decreasing or an entry is at or above
            ``1 / T_aq``.
    """
    f_s_grid = np.asarray(list(f_s_grid), dtype=float)
    if len(f_s_grid) == 0:
        raise ArgumentError('The f_s grid is empty.')

    if (np.diff(f_s_grid) >= 0).any():
        raise ArgumentError('The f_s grid must be strictly decreasing.')

    if (f_s_grid <= 0).any():
        raise ArgumentError('Sampling frequencies must be positive.')

    problem = _Problem(model, circuit, harvester, dac_n_factor)
    if problem.T_aq > 0 and f_s_grid[0] >= 1.0 / problem.T_aq:
        message = 'f_s = {} Hz is not below 1 / T_aq = {} Hz'
        raise ArgumentError(message.format(f_s_grid[0], 1.0 / problem.T_aq))

    LOGGER.info('Sweeping %s rates for n=%s and %r', len(f_s_grid), circuit.n, model)
    return [problem.point(1.0 / f_s) for f_s in f_s_grid]


def nyquist_energy_ratio(model, circuit, harvester, dac_n_factor=False):
    """Energy ratio, in dB, when sampling a band-limited input exactly at Nyquist.

    Raises:
        ArgumentError: if ``model`` has no bandlimit.
        InfeasibleError: if the Nyquist interval is shorter than ``T_aq``.
    """
    edge = model.bandlimit()
    if edge is None:
        raise ArgumentError('{!r} has no bandlimit'.format(model))

    problem = _Problem(model, circuit, harvester, dac_n_factor)
    T_s = 1.0 / (2.0 * edge)
    if T_s < problem.T_aq:
        message = 'Nyquist interval {} s is shorter than T_aq = {} s'
        raise InfeasibleError(message.format(T_s, problem.T_aq))

    return problem.point(T_s, zeta=0.0).E_ratio_db


def zero_power_nmse(model, circuit, harvester, dac_n_factor=False):
    """Minimal NMSE of a converter that harvests as much energy as it consumes."""
    return min_nmse_under_energy(model, circuit, harvester, 1.0, dac_n_factor).zeta


def curve_frame(points):
    """Collect tradeoff points into a DataFrame with the curve columns."""
    return pd.DataFrame([point.to_row() for point in points], columns=list(CURVE_COLUMNS))


def tradeoff_family(model, circuit, harvester, bits, f_s_grid, dac_n_factor=False):
    """Sweep the same rate grid for several resolutions.

    Returns:
        pandas.DataFrame: Curve columns preceded by the resolution ``n``.
    """
    frames = []
    for n in bits:
        points = tradeoff_curve(model, circuit.with_bits(n), harvester, f_s_grid, dac_n_factor)
        frame = curve_frame(points)
        frame.insert(0, 'n', n)
        frames.append(frame)

    return pd.concat(frames, ignore_index=True)
