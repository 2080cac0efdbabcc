from esampling.psd.base import (
    PsdModel, PsdType, aliased_sum, bandlimit, psd_eval, replica_densities, truncated_density,
    variance)
from esampling.psd.flat import FlatPsd
from esampling.psd.gaussian import MultimodalPsd, UnimodalPsd
from esampling.psd.tabulated import TabulatedPsd, load_table

__all__ = (
    'FlatPsd',
    'MultimodalPsd',
    'PsdModel',
    'PsdType',
    'TabulatedPsd',
    'UnimodalPsd',
    'aliased_sum',
    'bandlimit',
    'load_table',
    'psd_eval',
    'replica_densities',
    'truncated_density',
    'variance',
)
