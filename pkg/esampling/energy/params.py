"""Value types describing the converter, the harvester and the sampling schedule."""

from dataclasses import asdict, dataclass, fields, replace
from enum import Enum
from typing import Optional

from esampling import ArgumentError, ConfigurationError, InfeasibleError
from esampling.energy.consumption import min_hold_time
from esampling.energy.harvest import harvester_efficiency_rc


def _build(cls, params):
    params = dict(params)
    known = {item.name for item in fields(cls) if item.init}
    unknown = set(params) - known
    if unknown:
        message = 'Unknown {} fields: {}'
        raise ConfigurationError(message.format(cls.__name__, ', '.join(sorted(unknown))))

    return cls(**params)


@dataclass(frozen=True)
class AdcCircuitParams:
    """Circuit constants of a charge-redistribution SAR ADC with a sample-and-hold front end.

    Capacitances are in F, resistances in Ω and voltages in V. ``R_on`` and ``R_q`` may be
    left unset when the acquisition time is known directly through ``t_aq_override``.
    """

    n: int
    C_u: float
    C_c: float
    C_s: float
    g: float
    A_k: float
    V_e: float
    alpha_tau: float
    V_ref: float
    K: float
    R_on: Optional[float] = None
    R_q: Optional[float] = None
    t_aq_override: Optional[float] = None

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ConfigurationError('n must be a positive integer, got {}'.format(self.n))

        object.__setattr__(self, 'n', int(self.n))
        for name in ('C_u', 'C_c', 'C_s', 'V_e', 'alpha_tau', 'V_ref'):
            if getattr(self, name) < 0:
                raise ConfigurationError('{} must be non-negative'.format(name))

        for name in ('R_on', 'R_q', 't_aq_override'):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ConfigurationError('{} must be non-negative'.format(name))

        if not 0.0 <= self.g <= 1.0:
            raise ConfigurationError('g must lie in [0, 1], got {}'.format(self.g))

        if not self.K > 1:
            raise ConfigurationError('K must be greater than 1, got {}'.format(self.K))

    @property
    def C_h(self):
        """Total sampling capacitance ``2^(n-1) C_u``."""
        return 2.0 ** (self.n - 1) * self.C_u

    @property
    def sigma_x(self):
        return self.V_ref / self.K

    @property
    def sigma_x2(self):
        return self.sigma_x ** 2

    def with_bits(self, n):
        """Return a copy of these params at resolution ``n``."""
        return replace(self, n=n)

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, params):
        return _build(cls, params)


class EfficiencyMode(Enum):
    """How the harvester efficiency is obtained."""

    FIXED = 0
    FROM_RC = 1


@dataclass(frozen=True)
class HarvesterParams:
    """Energy-harvesting branch connected to the input during the hold phase.

    Args:
        R_h (float): Source-to-capacitor resistance in Ω.
        C_EH (float): Harvesting capacitance in F.
        efficiency_mode (EfficiencyMode or str): ``FIXED`` uses ``eta`` as is, ``FROM_RC``
            derives it from ``R_h``, ``C_EH`` and the hold time.
        eta (float): Fixed efficiency in ``[0, 1]``.
        transfer_period_samples (int): Samples between two transfers of the capacitor
            energy; ``None`` never transfers.
        transfer_dead_time (float): Pause in harvesting after each transfer, in s.
        diode_ideal (bool): Only charge the capacitor while the input exceeds its voltage.
    """

    R_h: float
    C_EH: float
    efficiency_mode: EfficiencyMode = EfficiencyMode.FIXED
    eta: float = 0.7
    transfer_period_samples: Optional[int] = None
    transfer_dead_time: float = 0.0
    diode_ideal: bool = False

    def __post_init__(self):
        mode = self.efficiency_mode
        if not isinstance(mode, EfficiencyMode):
            try:
                mode = EfficiencyMode[str(mode).upper()]
            except KeyError:
                raise ConfigurationError('Invalid efficiency mode {}'.format(mode)) from None

            object.__setattr__(self, 'efficiency_mode', mode)

        if not (self.R_h > 0 and self.C_EH > 0):
            raise ConfigurationError('R_h and C_EH must be positive')

        if not 0.0 <= self.eta <= 1.0:
            raise ConfigurationError('eta must lie in [0, 1], got {}'.format(self.eta))

        period = self.transfer_period_samples
        if period is not None and (int(period) != period or period < 1):
            raise ConfigurationError('transfer_period_samples must be a positive integer')

        if period is not None:
            object.__setattr__(self, 'transfer_period_samples', int(period))

        if self.transfer_dead_time < 0:
            raise ConfigurationError('transfer_dead_time must be non-negative')

    @property
    def time_constant(self):
        return self.R_h * self.C_EH

    def efficiency(self, T_h):
        """Efficiency of harvesting over a hold window of length ``T_h``."""
        if self.efficiency_mode is EfficiencyMode.FIXED:
            return self.eta

        if T_h <= 0:
            return 0.0

        return harvester_efficiency_rc(self.R_h, self.C_EH, T_h)

    def to_dict(self):
        params = asdict(self)
        params['efficiency_mode'] = self.efficiency_mode.name
        return params

    @classmethod
    def from_dict(cls, params):
        return _build(cls, params)


@dataclass(frozen=True)
class TimingPlan:
    """Acquisition and hold durations of one sampling period, ``T_s = T_aq + T_h``."""

    T_aq: float
    T_h: float

    def __post_init__(self):
        if self.T_aq < 0:
            raise ArgumentError('T_aq must be non-negative, got {}'.format(self.T_aq))

        if self.T_h < 0:
            raise ArgumentError('T_h must be non-negative, got {}'.format(self.T_h))

        if self.T_aq + self.T_h <= 0:
            raise ArgumentError('The sampling period must be positive')

    @property
    def T_s(self):
        return self.T_aq + self.T_h

    @property
    def f_s(self):
        return 1.0 / self.T_s

    @classmethod
    def from_hold(cls, T_aq, T_h):
        return cls(T_aq=float(T_aq), T_h=float(T_h))

    @classmethod
    def from_sampling_rate(cls, T_aq, f_s):
        """Build the plan that samples at ``f_s`` after an acquisition of ``T_aq``.

        Raises:
            ArgumentError: if the sampling period is shorter than ``T_aq``.
        """
        if not f_s > 0:
            raise ArgumentError('f_s must be positive, got {}'.format(f_s))

        T_h = 1.0 / f_s - T_aq
        if T_h < 0:
            message = 'f_s = {} Hz leaves no time after an acquisition of {} s'
            raise ArgumentError(message.format(f_s, T_aq))

        return cls(T_aq=float(T_aq), T_h=float(T_h))

    def validate(self, circuit, min_hold=None):
        """Check that the hold window fits an ``n``-bit conversion.

        Args:
            circuit (AdcCircuitParams): Converter the plan drives.
            min_hold (float): Minimum hold time; computed from ``circuit`` when ``R_q``
                is known and skipped otherwise.

        Raises:
            InfeasibleError: if ``T_h`` is shorter than the conversion needs.
        """
        if min_hold is None:
            if circuit.R_q is None:
                return self

            min_hold = min_hold_time(circuit)

        if self.T_h < min_hold:
            message = 'T_h = {} s is shorter than the {} s an {}-bit conversion needs'
            raise InfeasibleError(message.format(self.T_h, min_hold, circuit.n))

        return self

    def to_dict(self):
        return {'T_aq': self.T_aq, 'T_h': self.T_h, 'T_s': self.T_s, 'f_s': self.f_s}
