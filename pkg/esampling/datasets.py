import numpy as np

from esampling.presets import PAPER_EXAMPLE
from esampling.psd import FlatPsd, MultimodalPsd, TabulatedPsd, UnimodalPsd


def _power(preset):
    return preset.circuit.sigma_x2


def flat_psd(preset=PAPER_EXAMPLE):
    """Flat spectrum up to the preset ``f_m`` with power ``(V_ref / K)^2``.

    Args:
        preset (Preset):
            Parameter set providing ``f_m``, ``V_ref`` and ``K``. Defaults to
            ``paper-example``.

    Returns:
        FlatPsd
    """
    return FlatPsd(sigma_x2=_power(preset), f_m=preset.f_m)


def unimodal_psd(preset=PAPER_EXAMPLE):
    """Gaussian spectrum centred at DC, ``sigma = f_m / 3``."""
    return UnimodalPsd(sigma_x2=_power(preset), f_m=preset.f_m, sigma=preset.f_m / 3.0)


def multimodal_psd(preset=PAPER_EXAMPLE):
    """Gaussian lobes at ``+-f_m``, ``sigma = f_m / 6``."""
    return MultimodalPsd(sigma_x2=_power(preset), f_m=preset.f_m, sigma=preset.f_m / 6.0)


def flat_table(preset=PAPER_EXAMPLE, points=101, span=1.5):
    """Tabulated version of :func:`flat_psd`, sampled up to ``span * f_m``.

    The band edge is placed on a node so the table reproduces the flat power exactly.

    Returns:
        TabulatedPsd
    """
    f_m = preset.f_m
    level = _power(preset) / (2.0 * f_m)
    inside = np.linspace(0.0, f_m, points)
    outside = np.linspace(f_m, span * f_m, points)[1:]
    frequencies = np.concatenate([inside, outside])
    densities = np.where(frequencies <= f_m, level, 0.0)
    # one node past the edge so the interpolant drops to zero right after f_m
    frequencies = np.insert(frequencies, points, f_m * (1.0 + 1e-9))
    densities = np.insert(densities, points, 0.0)
    return TabulatedPsd(table=np.column_stack([frequencies, densities]))
