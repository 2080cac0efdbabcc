import logging

import numpy as np

from esampling import ArgumentError

LOGGER = logging.getLogger(__name__)


def bisect(f, xmin, xmax, rtol=1e-9, maxiter=200):
    """Bisection method for the edge of a feasible region.

    This method implements a simple vectorized routine for locating the largest ``x``
    such that ``f(x) <= 0``, for a monotonically non-decreasing ``f`` and a bracketing
    interval. Points where ``f`` is exactly zero count as feasible, so on a plateau
    ``f == 0`` the right end of the plateau is returned.

    Arguments:
        f (Callable):
            A function which takes as input a vector x and returns a
            vector with the same number of dimensions.
        xmin (np.ndarray):
            Values of x such that f(x) <= 0.
        xmax (np.ndarray):
            Values of x such that f(x) > 0.
        rtol (float):
            Relative width of the final bracket.
        maxiter (int):
            Maximum number of halvings.

    Returns:
        numpy.ndarray:
            The feasible end of the final bracket.

    Raises:
        ArgumentError: if the initial interval does not bracket the edge.
    """
    xmin = np.array(xmin, dtype=float, ndmin=1)
    xmax = np.array(xmax, dtype=float, ndmin=1)
    if (f(xmin) > 0.0).any() or (f(xmax) <= 0.0).any():
        raise ArgumentError('The interval [xmin, xmax] does not bracket a feasibility edge.')

    for iteration in range(maxiter):
        guess = (xmin + xmax) / 2.0
        feasible = f(guess) <= 0.0
        xmin[feasible] = guess[feasible]
        xmax[~feasible] = guess[~feasible]
        LOGGER.debug('Bisection step %s: bracket [%s, %s]', iteration, xmin, xmax)
        if ((xmax - xmin) <= rtol * np.abs(xmax)).all():
            break

    return xmin
