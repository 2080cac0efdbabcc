"""Successive-approximation conversion with a merged-capacitor-switching (MCS) DAC.

The DAC is a single-ended array of capacitors ``c_i = 2^(n-1-i) C_u`` for
``i = 1 .. n-1`` plus one dummy unit, ``2^(n-1) C_u`` in total. Bottom plates start at
``V_cm = V_ref / 2``. The first decision is free; after deciding bit ``i`` the capacitor
``c_i`` is switched to ground when the bit is 1 and to ``V_ref`` when it is 0.
"""

from collections import namedtuple

import numpy as np

from esampling import ArgumentError

Conversion = namedtuple('Conversion', ['code', 'dac_energy', 'overload'])


def quantize(v, n, V_ref):
    """Binary search of ``v`` against the DAC levels ``k V_ref / 2^n``.

    Returns:
        tuple[numpy.ndarray, numpy.ndarray]: Codes clamped to ``[0, 2^n - 1]`` and a mask
        of the inputs that fell outside ``[0, V_ref]``.
    """
    v = np.asarray(v, dtype=float)
    overload = (v < 0.0) | (v > V_ref)
    scaled = v / V_ref * 2.0 ** n

    code = np.zeros(v.shape, dtype=np.int64)
    for bit in range(n - 1, -1, -1):
        trial = code + (1 << bit)
        keep = scaled >= trial
        code = np.where(keep, trial, code)

    return code, overload


def switching_energy(code, n, C_u, V_ref):
    """Energy drawn from ``V_ref`` by the MCS switching sequence of each code.

    Each switching event moves charge between the array and the reference. Switching
    ``c_i`` up draws ``c_i V_cm (1 - (R + c_i) / C)`` and switching it down draws
    ``R c_i V_cm / C``, where ``R`` is the capacitance already tied to ``V_ref`` and ``C``
    the total array capacitance.

    Args:
        code (numpy.ndarray): Output codes.
        n (int): Resolution in bits.
        C_u (float): Unit capacitance in F.
        V_ref (float): Reference voltage in V.

    Returns:
        numpy.ndarray: Energy per code in J.
    """
    code = np.asarray(code, dtype=np.int64)
    total = 2.0 ** (n - 1)
    V_cm = 0.5
    on_reference = np.zeros(code.shape)
    charge = np.zeros(code.shape)
    for i in range(1, n):
        bit = (code >> (n - i)) & 1
        c_i = 2.0 ** (n - 1 - i)
        down = on_reference * c_i * V_cm / total
        up = c_i * V_cm * (1.0 - (on_reference + c_i) / total)
        charge += np.where(bit == 1, down, up)
        on_reference = np.where(bit == 1, on_reference, on_reference + c_i)

    return charge * C_u * V_ref ** 2


def sar_convert(v, p):
    """Convert held voltages and account for the DAC energy of each conversion.

    Args:
        v (float or numpy.ndarray): Held voltages in V.
        p (AdcCircuitParams): Circuit constants.

    Returns:
        Conversion: ``code`` (int or array), ``dac_energy`` in J and ``overload`` flag,
        set when ``v`` was outside ``[0, V_ref]`` and the code was clamped.
    """
    if p.n < 2:
        raise ArgumentError('The MCS DAC needs at least 2 bits, got {}'.format(p.n))

    if not p.V_ref > 0:
        raise ArgumentError('V_ref must be positive to convert')

    scalar = np.ndim(v) == 0
    code, overload = quantize(v, p.n, p.V_ref)
    code = np.minimum(code, 2 ** p.n - 1)
    energy = switching_energy(code, p.n, p.C_u, p.V_ref)
    if scalar:
        return Conversion(int(code), float(energy), bool(overload))

    return Conversion(code, energy, overload)


def dac_energy_table(p):
    """Switching energy of every output code, indexed by code."""
    return switching_energy(np.arange(2 ** p.n), p.n, p.C_u, p.V_ref)


def average_dac_energy(p):
    """Exhaustive average of the switching energy over uniformly weighted codes."""
    return float(np.mean(dac_energy_table(p)))
