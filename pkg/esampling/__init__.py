# -*- coding: utf-8 -*-

"""Top-level package for eSampling."""

__author__ = 'eSampling Developers'
__version__ = '0.1.0.dev0'

import importlib
from copy import deepcopy

import numpy as np
import pandas as pd


class ArgumentError(ValueError):
    """A numeric argument is outside the range an operation accepts."""


class DomainError(ValueError):
    """A spectral density was queried outside the domain it is defined on."""


class InfeasibleError(ValueError):
    """An energy, fidelity or Nyquist constraint cannot be satisfied."""


class ConfigurationError(ValueError):
    """A parameter set, preset or configuration file is invalid."""


class OverloadWarning(RuntimeWarning):
    pass


def validate_random_state(random_state):
    """Return a private ``numpy.random.Generator`` for ``random_state``.

    Args:
        random_state (int, numpy.random.Generator or None):
            Seed for a new generator, an existing generator (returned as is), or ``None``
            for a fresh unseeded one. The global numpy random state is never touched.
    """
    if random_state is None or isinstance(random_state, (int, np.integer)):
        return np.random.default_rng(random_state)

    if isinstance(random_state, np.random.Generator):
        return random_state

    raise ArgumentError('{!r} is not a valid random state'.format(random_state))


def get_instance(obj, **kwargs):
    """Create new instance of the ``obj`` argument.

    Args:
        obj (str, type, instance):
            Fully qualified class name, class, or an instance to copy. An instance is
            rebuilt with ``kwargs`` when they are given and deep-copied otherwise.
    """
    if isinstance(obj, str):
        package, name = obj.rsplit('.', 1)
        return getattr(importlib.import_module(package), name)(**kwargs)

    if isinstance(obj, type):
        return obj(**kwargs)

    if kwargs:
        return obj.__class__(**kwargs)

    return deepcopy(obj)


def get_qualified_name(_object):
    """Return the Fully Qualified Name from an instance or class."""
    module = _object.__module__
    if hasattr(_object, '__name__'):
        _class = _object.__name__

    else:
        _class = _object.__class__.__name__

    return module + '.' + _class


def scalarize(function):
    """Allow methods that only accepts 1-d vectors to work with scalars.

    Args:
        function(callable): Function that accepts and returns vectors.

    Returns:
        callable: Decorated function that accepts and returns scalars.
    """

    def decorated(self, X, *args, **kwargs):
        scalar = np.ndim(X) == 0

        X = np.atleast_1d(np.asarray(X, dtype=float))

        result = function(self, X, *args, **kwargs)
        if scalar:
            result = float(result[0])

        return result

    decorated.__doc__ = function.__doc__
    return decorated


def check_valid_values(function):
    """Raises an exception if the given sample values are not supported.

    Args:
        function(callable): Function whose first argument is a numpy.array-like object.

    Returns:
        callable: Decorated function

    Raises:
        ArgumentError: If there are missing or invalid values or if the sequence is empty.
    """

    def decorated(X, *args, **kwargs):

        if isinstance(X, (pd.DataFrame, pd.Series)):
            W = X.values

        else:
            W = np.asarray(X)

        if not len(W):
            raise ArgumentError('The sample sequence is empty.')

        if not (np.issubdtype(W.dtype, np.floating) or np.issubdtype(W.dtype, np.integer)):
            raise ArgumentError('There are non-numerical values in the samples.')

        if np.isnan(W).any():
            raise ArgumentError('There are nan values in the samples.')

        return function(X, *args, **kwargs)

    decorated.__doc__ = function.__doc__
    decorated.__name__ = function.__name__
    return decorated


def to_decibels(ratio):
    """Convert a linear energy ratio to dB, mapping 0 to ``-inf``."""
    ratio = float(ratio)
    if ratio <= 0.0:
        return -np.inf

    return 10.0 * np.log10(ratio)
