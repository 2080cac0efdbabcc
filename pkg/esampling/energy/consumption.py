"""Timing and per-sample consumption of a SAR ADC with a merged-capacitor-switching DAC."""

from dataclasses import asdict, dataclass, replace
from typing import Optional

import numpy as np

from esampling import ArgumentError, ConfigurationError, to_decibels


@dataclass(frozen=True)
class EnergyBudget:
    """Per-sample energies of one conversion, in J.

    ``E_hold = E_DAC + E_c + E_sl = a1 V_ref + a2 V_ref^2``. ``E_h`` and ``E_ratio_db`` are
    only set once a harvesting window is attached through :meth:`with_harvest`.
    """

    E_c: float
    E_sl: float
    E_DAC: float
    E_hold: float
    a1: float
    a2: float
    E_h: Optional[float] = None
    E_ratio_db: Optional[float] = None

    def __post_init__(self):
        for name in ('E_c', 'E_sl', 'E_DAC', 'E_hold', 'a1', 'a2'):
            if getattr(self, name) < 0:
                raise ArgumentError('{} must be non-negative'.format(name))

    def with_harvest(self, E_h):
        """Attach the harvested energy and the resulting ratio."""
        ratio = E_h / self.E_hold if self.E_hold > 0 else np.inf
        return replace(self, E_h=float(E_h), E_ratio_db=to_decibels(ratio))

    def to_dict(self):
        return asdict(self)


def acquisition_time(p):
    """Time for the sampling capacitor to settle, ``alpha_tau R_on C_h``.

    An explicit ``t_aq_override`` takes precedence over the RC product.

    Raises:
        ConfigurationError: if neither ``R_on`` nor ``t_aq_override`` is known.
    """
    if p.t_aq_override is not None:
        return float(p.t_aq_override)

    if p.R_on is None:
        raise ConfigurationError('Acquisition time needs R_on or t_aq_override')

    return p.alpha_tau * p.R_on * p.C_h


def min_hold_time(p):
    """Shortest hold window that fits ``n`` bit cycles, ``n alpha_tau R_q C_h``."""
    if p.R_q is None:
        raise ConfigurationError('Minimum hold time needs R_q')

    return p.n * p.alpha_tau * p.R_q * p.C_h


def comparator_gamma(p):
    """Regeneration coefficient ``gamma_n`` of the comparator energy, in J/V."""
    if not p.A_k > 0:
        raise ArgumentError('A_k must be positive, got {}'.format(p.A_k))

    n = p.n
    cycles = n * np.log(1.0 / p.A_k) + n * (n + 1) / 2.0 * np.log(2.0) + n
    return p.V_e * p.C_c * cycles


def comparator_energy(p):
    """Energy of ``n`` comparator decisions, ``n C_c V_ref^2 + 2 V_ref gamma_n``.

    Raises:
        ArgumentError: if ``A_k`` is not positive.
    """
    gamma = comparator_gamma(p)
    return p.n * p.C_c * p.V_ref ** 2 + 2.0 * p.V_ref * gamma


def sar_logic_energy(p):
    """Energy of the SAR register, ``16 n^2 g C_s V_ref^2``."""
    return 16.0 * p.n ** 2 * p.g * p.C_s * p.V_ref ** 2


def dac_rho(n):
    """Switching coefficient of the MCS DAC averaged over uniformly distributed codes.

    Args:
        n (int): Resolution in bits.

    Returns:
        float: ``sum_{i=1}^{n-1} 2^(n-3-2i) (2^i - 1)``.

    Raises:
        ArgumentError: if ``n < 2``.
    """
    if n < 2:
        raise ArgumentError('The MCS DAC needs at least 2 bits, got {}'.format(n))

    i = np.arange(1, n)
    return float(np.sum(2.0 ** (n - 3 - 2 * i) * (2.0 ** i - 1)))


def _dac_capacitance(p, dac_n_factor):
    rho = dac_rho(p.n)
    if dac_n_factor:
        rho *= p.n

    return rho * p.C_u


def dac_energy_avg(p, dac_n_factor=False):
    """Average DAC energy per conversion, ``rho_n C_u V_ref^2``.

    Args:
        p (AdcCircuitParams): Circuit constants.
        dac_n_factor (bool): Use the grouping with an extra factor ``n``
            (``rho_n n C_u V_ref^2``) instead.

    Returns:
        float: Energy in J.
    """
    return _dac_capacitance(p, dac_n_factor) * p.V_ref ** 2


def hold_energy(p, dac_n_factor=False):
    """Compute the energy consumed during the hold phase of one sample.

    The acquisition phase is taken to consume nothing.

    Args:
        p (AdcCircuitParams): Circuit constants.
        dac_n_factor (bool): Forwarded to :func:`dac_energy_avg`.

    Returns:
        EnergyBudget: Consumption split per block, plus the polynomial coefficients.
    """
    E_c = comparator_energy(p)
    E_sl = sar_logic_energy(p)
    E_DAC = dac_energy_avg(p, dac_n_factor)

    a2 = _dac_capacitance(p, dac_n_factor) + p.n * p.C_c + 16.0 * p.n ** 2 * p.C_s * p.g
    a1 = 2.0 * comparator_gamma(p)

    return EnergyBudget(
        E_c=E_c,
        E_sl=E_sl,
        E_DAC=E_DAC,
        E_hold=a1 * p.V_ref + a2 * p.V_ref ** 2,
        a1=a1,
        a2=a2,
    )
