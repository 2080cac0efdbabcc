from unittest import TestCase

import numpy as np

from esampling import ArgumentError, ConfigurationError
from esampling.energy import (
    EnergyBudget, acquisition_time, comparator_energy, comparator_gamma, dac_energy_avg, dac_rho,
    hold_energy, min_hold_time, sar_logic_energy)
from esampling.presets import PAPER_EXAMPLE
from tests import small_circuit


class TestTiming(TestCase):

    def test_acquisition_time(self):
        assert np.isclose(acquisition_time(small_circuit()), 6.4e-11, rtol=1e-12)

    def test_acquisition_override(self):
        """An explicit acquisition time wins over the RC product."""
        assert acquisition_time(PAPER_EXAMPLE.circuit) == 2.5e-9
        assert acquisition_time(small_circuit(t_aq_override=1e-9)) == 1e-9

    def test_acquisition_needs_r_on(self):
        with self.assertRaises(ConfigurationError):
            acquisition_time(small_circuit(R_on=None))

    def test_min_hold_time(self):
        assert np.isclose(min_hold_time(small_circuit()), 2.56e-10, rtol=1e-12)

    def test_min_hold_needs_r_q(self):
        with self.assertRaises(ConfigurationError):
            min_hold_time(small_circuit(R_q=None))


class TestBlocks(TestCase):

    def test_comparator_without_regeneration(self):
        """With V_e = 0 the comparator only pays n C_c V_ref^2."""
        # Setup
        circuit = small_circuit()

        # Check
        assert comparator_gamma(circuit) == 0.0
        assert np.isclose(comparator_energy(circuit), 8e-15, rtol=1e-12)

    def test_comparator_paper_example(self):
        # Setup
        circuit = PAPER_EXAMPLE.circuit

        # Run
        gamma = comparator_gamma(circuit)
        energy = comparator_energy(circuit)

        # Check
        assert np.isclose(gamma, 7.062751295e-15, rtol=1e-8)
        assert np.isclose(energy, 3.690040207e-14, rtol=1e-8)

    def test_comparator_invalid_gain(self):
        with self.assertRaises(ArgumentError):
            comparator_energy(small_circuit(A_k=0.0))

    def test_sar_logic(self):
        assert np.isclose(sar_logic_energy(small_circuit()), 5.12e-13, rtol=1e-12)
        assert np.isclose(sar_logic_energy(PAPER_EXAMPLE.circuit), 1.835008e-13, rtol=1e-12)

    def test_dac_rho(self):
        assert dac_rho(2) == 0.125
        assert np.isclose(dac_rho(8), 21.08398438, rtol=1e-9)
        assert np.isclose(dac_rho(10), 85.08349609, rtol=1e-9)

    def test_dac_rho_too_few_bits(self):
        with self.assertRaises(ArgumentError):
            dac_rho(1)

    def test_dac_energy(self):
        # Run
        energy = dac_energy_avg(PAPER_EXAMPLE.circuit)
        grouped = dac_energy_avg(PAPER_EXAMPLE.circuit, dac_n_factor=True)

        # Check
        assert np.isclose(energy, 1.349375e-13, rtol=1e-6)
        assert np.isclose(grouped, 8 * energy, rtol=1e-12)


class TestHoldEnergy(TestCase):

    def test_sum_of_blocks(self):
        """The hold energy is the sum of the three blocks."""
        # Run
        budget = hold_energy(PAPER_EXAMPLE.circuit)

        # Check
        assert isinstance(budget, EnergyBudget)
        assert np.isclose(budget.E_hold, budget.E_c + budget.E_sl + budget.E_DAC, rtol=1e-12)
        assert budget.E_h is None

    def test_polynomial_in_v_ref(self):
        """E_hold = a1 V_ref + a2 V_ref^2."""
        # Setup
        circuit = PAPER_EXAMPLE.circuit

        # Run
        budget = hold_energy(circuit)

        # Check
        V_ref = circuit.V_ref
        assert np.isclose(budget.a1 * V_ref + budget.a2 * V_ref ** 2, budget.E_hold, rtol=1e-12)
        assert np.isclose(budget.a1, 2 * comparator_gamma(circuit), rtol=1e-12)

    def test_paper_example_values(self):
        """Per-sample consumption of the example converter at several resolutions."""
        expected = {8: 3.553387021e-13, 12: 2.65781521e-12, 16: 3.577648192e-11}
        for n, E_hold in expected.items():
            with self.subTest(n=n):
                budget = hold_energy(PAPER_EXAMPLE.circuit.with_bits(n))

                assert np.isclose(budget.E_hold, E_hold, rtol=1e-8)

    def test_grows_with_resolution(self):
        values = [hold_energy(PAPER_EXAMPLE.circuit.with_bits(n)).E_hold for n in range(2, 17)]

        assert (np.diff(values) > 0).all()

    def test_small_circuit(self):
        budget = hold_energy(small_circuit())

        assert budget.a1 == 0.0
        assert np.isclose(budget.E_hold, 5.410839844e-13, rtol=1e-9)

    def test_with_harvest(self):
        # Setup
        budget = hold_energy(small_circuit())

        # Run
        result = budget.with_harvest(10 * budget.E_hold)

        # Check
        assert np.isclose(result.E_ratio_db, 10.0)
        assert result.E_hold == budget.E_hold
        assert set(result.to_dict()) == {
            'E_c', 'E_sl', 'E_DAC', 'E_hold', 'a1', 'a2', 'E_h', 'E_ratio_db'}

    def test_negative_budget(self):
        with self.assertRaises(ArgumentError):
            EnergyBudget(E_c=-1.0, E_sl=0.0, E_DAC=0.0, E_hold=0.0, a1=0.0, a2=0.0)
