from unittest import TestCase

import numpy as np

from esampling.energy import (
    TimingPlan, acquisition_time, effective_harvest_per_sample, hold_energy)
from esampling.presets import PAPER_EXAMPLE
from esampling.simulation import (
    SimConfig, Sinusoid, average_consumption, coherent_frequency, reconstruct, run_simulation,
    sndr_fft, steady_voltage)


class TestFullScaleTone(TestCase):
    """8-bit converter sampling a full-scale 19.8 MHz tone at 40 MHz."""

    @classmethod
    def setUpClass(cls):
        circuit = PAPER_EXAMPLE.circuit
        plan = TimingPlan.from_sampling_rate(acquisition_time(circuit), 40e6)
        frequency = coherent_frequency(PAPER_EXAMPLE.f_m, plan.f_s, 1024)
        cls.config = SimConfig(
            circuit=circuit,
            harvester=PAPER_EXAMPLE.harvester,
            plan=plan,
            input=Sinusoid(frequency=frequency, offset=0.4, amplitude=0.4),
            n_samples=2048,
        )
        cls.trace = run_simulation(cls.config)

    def test_sndr(self):
        """The converter behaves as an ideal 8-bit quantizer."""
        # Run
        result = sndr_fft(self.trace, n_fft=1024)

        # Check
        assert result.signal_bin == 507
        assert abs(result.sndr_db - 49.9) < 1.5
        assert abs(result.noise_floor_gap_db - 75.5) < 2.0
        assert abs(result.enob - 8.0) < 0.3

    def test_capacitor_plateau(self):
        """C_EH settles near the mean input voltage before the first transfer."""
        # Run
        plateau = steady_voltage(self.trace)

        # Check
        assert abs(plateau - 0.4) < 0.03
        assert (self.trace.v_eh <= 0.8).all()

    def test_self_powered(self):
        """Each transfer cycle harvests more than the conversions consume."""
        # Setup
        trace = self.trace
        period = PAPER_EXAMPLE.harvester.transfer_period_samples

        # Run
        consumed = average_consumption(trace)
        harvested = effective_harvest_per_sample(
            PAPER_EXAMPLE.harvester.C_EH, trace.transfers[0].voltage, period)

        # Check
        assert len(trace.transfers) == 2048 // period
        assert harvested > 10 * consumed
        assert trace.e_harvested[-1] > trace.e_consumed[-1]

    def test_consumption_matches_model(self):
        """The per-code ledger averages to the closed-form hold energy."""
        # Run
        consumed = average_consumption(self.trace)

        # Check
        expected = hold_energy(PAPER_EXAMPLE.circuit).E_hold
        assert abs(consumed - expected) <= 0.05 * expected

    def test_ledger_ratio(self):
        """Over the run the transferred energy exceeds consumption by at least 12 dB."""
        # Run
        ratio = self.trace.e_harvested[-1] / self.trace.e_consumed[-1]

        # Check
        assert 10.0 * np.log10(ratio) >= 12.0

    def test_passive(self):
        for transfer in self.trace.transfers:
            assert transfer.energy <= transfer.available

    def test_reconstruction(self):
        """The tone is recovered from the codes to within a few LSBs."""
        # Run
        times, values = reconstruct(self.trace, oversample=4)

        # Check
        error = values - self.config.input(times)
        assert np.sqrt(np.mean(error ** 2)) < 2 * self.trace.lsb
