"""Time-domain simulation of a sample-and-hold SAR ADC that harvests during the hold phase.

Each sampling period has two phases. During acquisition the input tracks onto the
sampling capacitor and the harvester is disconnected. During the hold phase the held
voltage is converted while the input charges the harvesting capacitor through ``R_h``.
"""

import logging
from collections import namedtuple
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from esampling.energy import comparator_energy, sar_logic_energy
from esampling.simulation.sar import sar_convert

LOGGER = logging.getLogger(__name__)

Transfer = namedtuple('Transfer', ['time', 'energy', 'available', 'voltage'])


@dataclass
class SimTrace:
    """Per-sample record of a simulation run.

    Attributes:
        time (numpy.ndarray): End of each sampling period, in s.
        codes (numpy.ndarray): Output codes.
        held_voltages (numpy.ndarray): Voltages presented to the converter, in V.
        v_eh (numpy.ndarray): Harvesting-capacitor voltage at the end of each hold phase,
            before any transfer.
        e_consumed (numpy.ndarray): Cumulative consumed energy, in J.
        e_harvested (numpy.ndarray): Cumulative energy transferred out of ``C_EH``, in J.
        per_sample_dac_energy (numpy.ndarray): DAC switching energy of each conversion.
        overload (numpy.ndarray): Conversions whose input was clipped.
        transfers (list[Transfer]): Every transfer, with the energy the source could have
            supplied over the same windows.
    """

    time: np.ndarray
    codes: np.ndarray
    held_voltages: np.ndarray
    v_eh: np.ndarray
    e_consumed: np.ndarray
    e_harvested: np.ndarray
    per_sample_dac_energy: np.ndarray
    overload: np.ndarray
    n: int
    V_ref: float
    T_s: float
    T_aq: float
    fixed_energy: float
    transfers: list = field(default_factory=list)
    overload_count: int = 0

    def __len__(self):
        return len(self.codes)

    @property
    def f_s(self):
        return 1.0 / self.T_s

    @property
    def lsb(self):
        return self.V_ref / 2 ** self.n

    def code_voltages(self):
        """Mid-step voltage of each output code."""
        return (self.codes + 0.5) * self.lsb

    def to_frame(self):
        """Voltage and ledgers with columns ``time_s``, ``v_eh_v``, ``e_consumed_j`` and
        ``e_harvested_j``.
        """
        return pd.DataFrame({
            'time_s': self.time,
            'v_eh_v': self.v_eh,
            'e_consumed_j': self.e_consumed,
            'e_harvested_j': self.e_harvested,
        })

    def codes_frame(self):
        return pd.DataFrame({
            'sample_index': np.arange(len(self.codes)),
            'code': self.codes,
        })

    def transfers_frame(self):
        return pd.DataFrame(self.transfers, columns=list(Transfer._fields))


def run_simulation(config):
    """Simulate ``config.n_samples`` sampling periods.

    Args:
        config (SimConfig): Run configuration.

    Returns:
        SimTrace: Codes, capacitor voltage and energy ledgers.
    """
    circuit = config.circuit
    harvester = config.harvester
    plan = config.plan
    n_samples = config.n_samples
    plan.validate(circuit)

    LOGGER.info(
        'Simulating %s samples at %s Hz (n=%s, T_aq=%s s, T_h=%s s)',
        n_samples, plan.f_s, circuit.n, plan.T_aq, plan.T_h
    )

    waveform, overload_count = config.input.prepare(config)
    starts = plan.T_s * np.arange(n_samples)
    held = np.asarray(waveform(starts + plan.T_aq), dtype=float)
    conversion = sar_convert(held, circuit)

    fixed_energy = comparator_energy(circuit) + sar_logic_energy(circuit)
    consumed = np.cumsum(fixed_energy + conversion.dac_energy)

    substeps = config.hold_substeps
    dt = plan.T_h / substeps
    decay = np.exp(-dt / harvester.time_constant)
    offsets = plan.T_aq + dt * (np.arange(substeps) + 0.5)

    voltage = 0.0
    paused_until = -np.inf
    active_time = 0.0
    peak_power = 0.0
    transferred = 0.0
    v_eh = np.empty(n_samples)
    harvested = np.empty(n_samples)
    transfers = []
    period = harvester.transfer_period_samples

    for k in range(n_samples):
        times = starts[k] + offsets
        inputs = waveform(times)
        for t, x in zip(times, inputs):
            if t < paused_until:
                continue

            active_time += dt
            peak_power = max(peak_power, x * x)
            if harvester.diode_ideal and x <= voltage:
                continue

            voltage = x + (voltage - x) * decay

        v_eh[k] = voltage
        if period is not None and (k + 1) % period == 0:
            energy = 0.5 * harvester.C_EH * voltage ** 2
            end = starts[k] + plan.T_s
            available = active_time / harvester.R_h * peak_power
            transfers.append(Transfer(end, energy, available, voltage))
            LOGGER.debug('Transfer at %s s: %s J at %s V', end, energy, voltage)

            transferred += energy
            voltage = 0.0
            active_time = 0.0
            peak_power = 0.0
            paused_until = end + harvester.transfer_dead_time

        harvested[k] = transferred

    return SimTrace(
        time=starts + plan.T_s,
        codes=np.asarray(conversion.code),
        held_voltages=held,
        v_eh=v_eh,
        e_consumed=consumed,
        e_harvested=harvested,
        per_sample_dac_energy=np.asarray(conversion.dac_energy),
        overload=np.asarray(conversion.overload),
        n=circuit.n,
        V_ref=circuit.V_ref,
        T_s=plan.T_s,
        T_aq=plan.T_aq,
        fixed_energy=fixed_energy,
        transfers=transfers,
        overload_count=overload_count + int(np.count_nonzero(conversion.overload)),
    )


def consumed_energy_ledger(trace):
    """Cumulative consumed energy as a series indexed by time.

    The final value divided by ``len(trace)`` is the average consumption per sample.
    """
    return pd.Series(trace.e_consumed, index=pd.Index(trace.time, name='time_s'),
                     name='e_consumed_j')


def average_consumption(trace):
    """Average consumed energy per sample, 0 for an empty trace."""
    if len(trace) == 0:
        return 0.0

    return float(trace.e_consumed[-1] / len(trace))


def steady_voltage(trace, window=32):
    """Plateau of the harvesting-capacitor voltage.

    Averages ``v_eh`` over the ``window`` samples preceding the first transfer, or
    preceding the end of the run when nothing was transferred.
    """
    if len(trace) == 0:
        return 0.0

    end = len(trace)
    if trace.transfers:
        end = int(round(trace.transfers[0].time / trace.T_s))

    start = max(0, end - window)
    return float(np.mean(trace.v_eh[start:end]))
