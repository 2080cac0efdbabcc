import logging

import numpy as np
import scipy.integrate as integrate

LOGGER = logging.getLogger(__name__)

MAX_SUBINTERVAL_EVALUATIONS = 200


def fold_breakpoints(breakpoints, f_s, upper):
    """Map spectral breakpoints onto ``[0, upper]`` through every replica shift.

    A replica ``S(f - k f_s)`` is non-smooth wherever ``f = k f_s +- b`` for one of the
    breakpoints ``b`` of ``S``.

    Args:
        breakpoints (Iterable[float]): Non-negative frequencies where the density is not smooth.
        f_s (float): Replica spacing in Hz.
        upper (float): Upper end of the integration range.

    Returns:
        numpy.ndarray: Sorted unique points inside ``(0, upper)``.
    """
    points = []
    for breakpoint in breakpoints:
        k_min = int(np.floor((0.0 - breakpoint) / f_s)) - 1
        k_max = int(np.ceil((upper + breakpoint) / f_s)) + 1
        shifts = np.arange(k_min, k_max + 1) * f_s
        points.append(shifts + breakpoint)
        points.append(shifts - breakpoint)

    if not points:
        return np.array([])

    points = np.unique(np.concatenate(points))
    return points[(points > 0.0) & (points < upper)]


def integrate_piecewise(function, lower, upper, points=(), epsabs=1e-12):
    """Integrate a scalar function over ``[lower, upper]`` split at ``points``.

    Each smooth piece is handed to :func:`scipy.integrate.quad`, so integrands with jumps
    at known locations (flat or tabulated spectra and their replicas) integrate exactly.

    Args:
        function (callable): Scalar integrand.
        lower (float): Lower integration limit.
        upper (float): Upper integration limit.
        points (Iterable[float]): Interior points where the integrand is not smooth.
        epsabs (float): Absolute tolerance for the whole integral.

    Returns:
        float: Value of the integral.
    """
    if upper <= lower:
        return 0.0

    points = np.asarray(points, dtype=float)
    points = points[(points > lower) & (points < upper)]
    edges = np.concatenate(([lower], np.unique(points), [upper]))

    pieces = len(edges) - 1
    tolerance = epsabs / pieces
    LOGGER.debug('Integrating over %s subintervals', pieces)

    total = 0.0
    for start, end in zip(edges[:-1], edges[1:]):
        value, _ = integrate.quad(
            function, start, end, epsabs=tolerance, epsrel=1e-10,
            limit=MAX_SUBINTERVAL_EVALUATIONS
        )
        total += value

    return total
