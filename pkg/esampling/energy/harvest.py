"""Energy harvested from the input during the hold phase."""

import logging

import numpy as np
from scipy.optimize import minimize_scalar

from esampling import ArgumentError, ConfigurationError, to_decibels

LOGGER = logging.getLogger(__name__)

#: Relative tolerance when checking that a PSD power matches ``(V_ref / K)^2``.
SIGNAL_POWER_RTOL = 1e-9


def _efficiency_at_ratio(x):
    return x / 2.0 * np.expm1(-1.0 / x) ** 2


def harvested_energy(T_h, eta, R_h, sigma_x2):
    """Energy collected over a hold window, ``(eta / R_h) T_h sigma_x^2``."""
    if not R_h > 0:
        raise ArgumentError('R_h must be positive, got {}'.format(R_h))

    if not 0.0 <= eta <= 1.0:
        raise ArgumentError('eta must lie in [0, 1], got {}'.format(eta))

    return eta / R_h * T_h * sigma_x2


def harvester_efficiency_rc(R_h, C_EH, T_h):
    r"""Efficiency of charging ``C_EH`` through ``R_h`` during ``T_h``.

    .. math:: \eta = \frac{x}{2}\left(1 - e^{-1/x}\right)^2, \quad x = R_h C_{EH} / T_h

    Args:
        R_h (float): Resistance in Ω.
        C_EH (float or numpy.ndarray): Capacitance in F.
        T_h (float): Hold time in s.

    Returns:
        float or numpy.ndarray: Efficiency, at most about 0.204.
    """
    C_EH = np.asarray(C_EH, dtype=float)
    if not (R_h > 0 and T_h > 0 and (C_EH > 0).all()):
        raise ArgumentError('R_h, C_EH and T_h must be positive')

    eta = _efficiency_at_ratio(R_h * C_EH / T_h)
    if eta.ndim == 0:
        return float(eta)

    return eta


def optimal_capacitance_ratio():
    """Find the ratio ``x = R_h C_EH / T_h`` that maximizes the RC efficiency.

    Returns:
        tuple[float, float]: Maximizing ratio and the efficiency it achieves.
    """
    result = minimize_scalar(
        lambda x: -_efficiency_at_ratio(x),
        bounds=(1e-2, 10.0),
        method='bounded',
        options={'xatol': 1e-10},
    )
    return float(result.x), float(-result.fun)


def harvest_capacitance(T_h, R_h, ratio=None):
    """Size ``C_EH`` for a hold time ``T_h``; defaults to the efficiency optimum."""
    if ratio is None:
        ratio, _ = optimal_capacitance_ratio()

    return ratio * T_h / R_h


def charge_samples(harvester, plan, fraction=0.999):
    """Number of sampling periods for ``C_EH`` to reach ``fraction`` of its plateau.

    The capacitor only charges during the hold window of each period.
    """
    if not 0.0 < fraction < 1.0:
        raise ArgumentError('fraction must lie in (0, 1), got {}'.format(fraction))

    if plan.T_h <= 0:
        return np.inf

    windows = -np.log1p(-fraction) * harvester.time_constant / plan.T_h
    return int(np.ceil(windows))


def effective_harvest_per_sample(C_EH, V_EH, cycle_samples):
    """Energy per sample when ``1/2 C_EH V_EH^2`` is transferred once every cycle."""
    if not cycle_samples >= 1:
        raise ArgumentError('cycle_samples must be at least 1, got {}'.format(cycle_samples))

    return 0.5 * C_EH * V_EH ** 2 / cycle_samples


def _ratio(T_h, budget, eta, R_h, sigma_x2, K):
    sigma_x = np.sqrt(sigma_x2)
    consumed = budget.a2 * K ** 2 * sigma_x2 + budget.a1 * K * sigma_x
    harvested = eta / R_h * T_h * sigma_x2
    if consumed <= 0:
        return np.inf if harvested > 0 else 0.0

    return harvested / consumed


def energy_ratio_linear(plan, budget, eta, R_h, sigma_x2, K):
    """Harvested over consumed energy per sample for a stationary input.

    The ratio depends on the input only through its power ``sigma_x2``.

    Raises:
        ArgumentError: if ``T_s <= T_aq``.
    """
    if plan.T_s <= plan.T_aq:
        message = 'T_s = {} s leaves no hold time after T_aq = {} s'
        raise ArgumentError(message.format(plan.T_s, plan.T_aq))

    return _ratio(plan.T_s - plan.T_aq, budget, eta, R_h, sigma_x2, K)


def energy_ratio(plan, budget, eta, R_h, sigma_x2, K):
    """Same as :func:`energy_ratio_linear`, in dB."""
    return to_decibels(energy_ratio_linear(plan, budget, eta, R_h, sigma_x2, K))


def check_signal_power(circuit, sigma_x2):
    """Check that a PSD power agrees with the circuit, ``sigma_x^2 = (V_ref / K)^2``.

    Raises:
        ConfigurationError: if the two differ by more than ``SIGNAL_POWER_RTOL``.
    """
    expected = circuit.sigma_x2
    if not np.isclose(sigma_x2, expected, rtol=SIGNAL_POWER_RTOL, atol=0.0):
        message = 'Signal power {} V² does not match (V_ref / K)² = {} V²'
        raise ConfigurationError(message.format(sigma_x2, expected))

    LOGGER.debug('Signal power %s V² matches the circuit', sigma_x2)
