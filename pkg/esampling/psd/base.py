"""This module contains a base class for power spectral density models."""

from enum import Enum

import numpy as np

from esampling import ArgumentError, get_instance, get_qualified_name, scalarize
from esampling.psd.utils import integrate_piecewise

#: Relative level, with respect to the peak density, below which replicas are dropped.
TRUNCATION_LEVEL = 1e-12

#: Distance, in Gaussian widths, at which a Gaussian lobe falls to ``TRUNCATION_LEVEL``.
GAUSSIAN_SPAN = np.sqrt(2.0 * np.log(1.0 / TRUNCATION_LEVEL))

#: Absolute quadrature tolerance, relative to the signal power.
QUADRATURE_TOLERANCE = 1e-9


class PsdType(Enum):
    """Available spectral density families."""

    FLAT = 0
    UNIMODAL = 1
    MULTIMODAL = 2
    TABULATED = 3


class PsdModel(object):
    """Base class for the spectral density of a zero-mean stationary input.

    This class allows to instantiate all its subclasses and serves as a unique entry point for
    the spectral density families.

    >>> PsdModel(psd_type='flat', sigma_x2=0.032, f_m=19.8e6).__class__
    esampling.psd.flat.FlatPsd

    Densities are even functions of frequency: every family evaluates its shape at ``|f|``.

    Args:
        psd_type (Union[PsdType, str]): Family of the spectral density.
        sigma_x2 (float): Total power of the signal in V².
        f_m (float): Characteristic or maximum frequency in Hz.

    Attributes:
        psd_type(PsdType): Family a subclass belongs to.
        _subclasses(list[type]): List of declared subclasses.
    """

    psd_type = None
    _subclasses = []

    @classmethod
    def _get_subclasses(cls):
        """Find recursively subclasses for the current class object.

        Returns:
            list[PsdModel]: List of subclass objects.
        """
        subclasses = []
        for subclass in cls.__subclasses__():
            subclasses.append(subclass)
            subclasses.extend(subclass._get_subclasses())

        return subclasses

    @classmethod
    def subclasses(cls):
        """Return a list of subclasses for the current class object.

        Returns:
            list[PsdModel]: Subclasses for given class.
        """
        if not cls._subclasses:
            cls._subclasses = cls._get_subclasses()

        return cls._subclasses

    def __new__(cls, *args, **kwargs):
        """Create and return a new object of the requested family."""
        psd_type = kwargs.get('psd_type', None)
        if psd_type is None:
            return super(PsdModel, cls).__new__(cls)

        if not isinstance(psd_type, PsdType):
            if isinstance(psd_type, str) and psd_type.upper() in PsdType.__members__:
                psd_type = PsdType[psd_type.upper()]
            else:
                raise ArgumentError('Invalid PSD type {}'.format(psd_type))

        for subclass in cls.subclasses():
            if subclass.psd_type is psd_type:
                return super(PsdModel, cls).__new__(subclass)

        raise ArgumentError('PSD type {} is not implemented'.format(psd_type.name))

    def __init__(self, sigma_x2, f_m, psd_type=None):
        if not sigma_x2 > 0:
            raise ArgumentError('sigma_x2 must be positive, got {}'.format(sigma_x2))

        if not f_m > 0:
            raise ArgumentError('f_m must be positive, got {}'.format(f_m))

        self.sigma_x2 = float(sigma_x2)
        self.f_m = float(f_m)

    def __repr__(self):
        params = ', '.join(
            '{}={!r}'.format(key, value)
            for key, value in self._get_params().items()
            if not isinstance(value, list)
        )
        return '{}({})'.format(self.__class__.__name__, params)

    def __eq__(self, other):
        return type(self) is type(other) and self.to_dict() == other.to_dict()

    def _density(self, f):
        """Evaluate the density at non-negative frequencies.

        Must be implemented in all the subclasses.

        Args:
            f (numpy.ndarray): Non-negative frequencies in Hz.

        Returns:
            numpy.ndarray: Density values in V²/Hz.
        """
        raise NotImplementedError

    def _check_domain(self, f):
        """Raise a ``DomainError`` if ``f`` lies where the density is undefined."""

    @scalarize
    def density(self, f):
        """Compute the spectral density at each frequency in ``f``.

        Args:
            f (float or numpy.ndarray): Frequencies in Hz.

        Returns:
            float or numpy.ndarray: Density values in V²/Hz.

        Raises:
            DomainError: if a tabulated density is queried outside its table.
        """
        f = np.abs(f)
        self._check_domain(f)
        return np.maximum(self._density(f), 0.0)

    def cutoff(self):
        """Frequency beyond which the density is negligible (or exactly zero).

        Returns:
            float: Truncation frequency ``F_cut`` in Hz.
        """
        raise NotImplementedError

    def bandlimit(self):
        """Return the support edge of compactly supported densities.

        Returns:
            float or None: ``f_m`` such that the density vanishes for ``|f| > f_m``.
        """
        return None

    def breakpoints(self):
        """Non-negative frequencies where the density is not smooth."""
        return []

    def peak(self):
        """Maximum value of the density."""
        frequencies = np.concatenate(([0.0], self.breakpoints(), [self.f_m]))
        frequencies = frequencies[frequencies <= self.cutoff()]
        return float(np.max(self._density(frequencies)))

    def variance(self):
        """Integrate the density over all frequencies.

        Returns:
            float: Signal power in V².
        """
        cutoff = self.cutoff()
        half = integrate_piecewise(
            self._density, 0.0, cutoff, self.breakpoints(),
            epsabs=QUADRATURE_TOLERANCE * self.sigma_x2 / 2.0
        )
        return 2.0 * half

    def _get_params(self):
        return {
            'sigma_x2': self.sigma_x2,
            'f_m': self.f_m,
        }

    def to_dict(self):
        """Return a `dict` with the parameters to replicate this object.

        Returns:
            dict: Parameters of the spectral density.
        """
        params = self._get_params()
        params['type'] = get_qualified_name(self)
        return params

    @classmethod
    def from_dict(cls, params):
        """Build a spectral density from its params dict.

        Args:
            params (dict):
                Dictionary containing the FQN of the density class and the
                necessary parameters to rebuild it, as returned by ``to_dict``.

        Returns:
            PsdModel: Spectral density instance.
        """
        params = params.copy()
        return get_instance(params.pop('type'), **params)


def psd_eval(model, f):
    """Evaluate ``S_x(f)``."""
    return model.density(f)


def variance(model):
    """Numerically integrate the density of ``model``."""
    return model.variance()


def bandlimit(model):
    """Return the bandlimit of ``model`` or ``None`` if its support is unbounded."""
    return model.bandlimit()


def truncated_density(model, f, cutoff=None):
    """Evaluate ``S_x(f)`` with the density set to 0 beyond the truncation frequency.

    Unlike :meth:`PsdModel.density`, this never raises for frequencies past a table.
    """
    cutoff = model.cutoff() if cutoff is None else cutoff
    distance = np.abs(np.asarray(f, dtype=float))
    values = np.zeros(distance.shape)
    inside = distance <= cutoff
    values[inside] = np.maximum(model._density(distance[inside]), 0.0)
    return values


def replica_densities(model, f, f_s, cutoff=None):
    """Evaluate the replicas ``S_x(f - k f_s)`` that survive truncation.

    A replica is kept when ``|f - k f_s| <= cutoff``; dropped replicas are returned as 0.

    Args:
        model (PsdModel): Spectral density.
        f (numpy.ndarray): Frequencies in Hz.
        f_s (float): Sampling frequency in Hz.
        cutoff (float): Truncation frequency. Defaults to ``model.cutoff()``.

    Returns:
        numpy.ndarray: Array of shape ``(len(f), n_replicas)``.
    """
    if not f_s > 0:
        raise ArgumentError('f_s must be positive, got {}'.format(f_s))

    cutoff = model.cutoff() if cutoff is None else cutoff
    f = np.atleast_1d(np.asarray(f, dtype=float))

    k_min = int(np.floor((f.min() - cutoff) / f_s))
    k_max = int(np.ceil((f.max() + cutoff) / f_s))
    shifts = np.arange(k_min, k_max + 1) * f_s

    distance = np.abs(f[:, np.newaxis] - shifts[np.newaxis, :])
    keep = distance <= cutoff

    values = np.zeros(distance.shape)
    values[keep] = np.maximum(model._density(distance[keep]), 0.0)
    return values


def aliased_sum(model, f, f_s, cutoff=None):
    """Compute ``sum_k S_x(f - k f_s)`` under the replica truncation rule.

    Args:
        model (PsdModel): Spectral density.
        f (float or numpy.ndarray): Frequencies in Hz.
        f_s (float): Sampling frequency in Hz.
        cutoff (float): Truncation frequency. Defaults to ``model.cutoff()``.

    Returns:
        float or numpy.ndarray: Aliased density in V²/Hz.
    """
    result = replica_densities(model, f, f_s, cutoff).sum(axis=1)
    if np.ndim(f) == 0:
        return float(result[0])

    return result
