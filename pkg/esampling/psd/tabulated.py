import logging

import numpy as np
import pandas as pd
from scipy.integrate import trapezoid

from esampling import ArgumentError, DomainError, check_valid_values
from esampling.psd.base import PsdModel, PsdType

LOGGER = logging.getLogger(__name__)

FREQUENCY_COLUMN = 'frequency_hz'
DENSITY_COLUMN = 'density_v2_per_hz'


@check_valid_values
def _validate_table(table):
    table = np.asarray(table, dtype=float)
    if table.ndim != 2 or table.shape[1] != 2:
        raise ArgumentError('A PSD table must have two columns, got shape {}'.format(table.shape))

    if len(table) < 2:
        raise ArgumentError('A PSD table needs at least two rows.')

    frequencies, densities = table[:, 0], table[:, 1]
    if (frequencies < 0).any():
        raise ArgumentError('A PSD table holds the positive-frequency half only.')

    if (np.diff(frequencies) <= 0).any():
        raise ArgumentError('PSD table frequencies must be strictly increasing.')

    if (densities < 0).any():
        raise ArgumentError('PSD table densities must be non-negative.')

    if frequencies[0] > 0:
        LOGGER.warning(
            'PSD table starts at %s Hz; extending it to 0 Hz with density %s',
            frequencies[0], densities[0]
        )
        table = np.vstack([[0.0, densities[0]], table])

    return table


class TabulatedPsd(PsdModel):
    """Spectral density given by samples of its positive-frequency half.

    The density is interpolated linearly between table nodes, mirrored to negative
    frequencies and undefined beyond the last node. Its power is the trapezoid
    integral of the table, which is exact for the interpolant.

    Args:
        table (list[tuple[float, float]]):
            Rows of ``(frequency Hz, density V²/Hz)`` sorted by frequency.
    """

    psd_type = PsdType.TABULATED

    def __init__(self, table, psd_type=None):
        table = _validate_table(table)
        self.frequencies = table[:, 0]
        self.densities = table[:, 1]

        sigma_x2 = 2.0 * trapezoid(self.densities, self.frequencies)
        if not sigma_x2 > 0:
            raise ArgumentError('A PSD table must carry some power.')

        edge = self.bandlimit()
        super().__init__(sigma_x2, self.frequencies[-1] if edge is None else edge)

    def _density(self, f):
        return np.interp(f, self.frequencies, self.densities, right=0.0)

    def _check_domain(self, f):
        outside = f > self.frequencies[-1]
        if outside.any():
            message = 'Frequency {} Hz is outside the table domain [0, {}] Hz'
            raise DomainError(message.format(f[outside][0], self.frequencies[-1]))

    def bandlimit(self):
        positive = np.flatnonzero(self.densities > 0)
        last = positive[-1]
        if last == len(self.densities) - 1:
            return None

        return float(self.frequencies[last + 1])

    def cutoff(self):
        edge = self.bandlimit()
        return float(self.frequencies[-1]) if edge is None else edge

    def breakpoints(self):
        return list(self.frequencies[1:])

    def variance(self):
        return self.sigma_x2

    def _get_params(self):
        return {
            'table': np.column_stack([self.frequencies, self.densities]).tolist()
        }

    @classmethod
    def from_frame(cls, frame):
        """Build a tabulated density from a DataFrame with the CSV columns."""
        missing = {FREQUENCY_COLUMN, DENSITY_COLUMN} - set(frame.columns)
        if missing:
            raise ArgumentError('Missing PSD table columns: {}'.format(sorted(missing)))

        return cls(table=frame[[FREQUENCY_COLUMN, DENSITY_COLUMN]].to_numpy())

    @classmethod
    def from_csv(cls, path):
        """Load a two-column CSV (``frequency_hz``, ``density_v2_per_hz``)."""
        LOGGER.info('Loading PSD table from %s', path)
        return cls.from_frame(pd.read_csv(path))

    def to_frame(self):
        return pd.DataFrame({
            FREQUENCY_COLUMN: self.frequencies,
            DENSITY_COLUMN: self.densities,
        })

    def to_csv(self, path):
        self.to_frame().to_csv(path, index=False)


def load_table(path):
    """Shortcut for :meth:`TabulatedPsd.from_csv`."""
    return TabulatedPsd.from_csv(path)
