import glob
import json
import os

import numpy as np
import pytest

from esampling import energy
from esampling.energy import (
    AdcCircuitParams, HarvesterParams, TimingPlan, acquisition_time, energy_ratio, hold_energy)
from esampling.presets import load_preset

BASE = os.path.dirname(__file__)
BUDGET_TESTS = glob.glob(BASE + '/test_cases/budget/*.json')
HARVEST_TESTS = glob.glob(BASE + '/test_cases/harvest/*.json')


def _load(config_path):
    with open(config_path, 'r') as config_file:
        return json.load(config_file)


def _setup(test_obj):
    if 'preset' in test_obj:
        preset = load_preset(test_obj['preset'])
        circuit = preset.circuit.with_bits(test_obj['kwargs']['n'])
        return circuit, preset.harvester, TimingPlan.from_sampling_rate(
            acquisition_time(circuit), 2.0 * preset.f_m)

    circuit = AdcCircuitParams.from_dict(test_obj['circuit'])
    harvester = HarvesterParams.from_dict(test_obj['harvester'])
    return circuit, harvester, TimingPlan.from_hold(acquisition_time(circuit), test_obj['T_h'])


@pytest.mark.parametrize("config_path", BUDGET_TESTS)
def test_budget(config_path):
    config = _load(config_path)

    # Setup
    circuit, harvester, plan = _setup(config['test'])
    expected = dict(config['expected_output'])
    settings = config['settings']

    # Run
    budget = hold_energy(circuit)
    ratio = energy_ratio(plan, budget, harvester.efficiency(plan.T_h), harvester.R_h,
                         circuit.sigma_x2, circuit.K)

    # Asserts
    assert abs(ratio - expected.pop('e_ratio_db')) < settings['atol_db']
    for name, value in expected.items():
        assert np.isclose(getattr(budget, name), value, rtol=settings['rtol'], atol=0.0), name


@pytest.mark.parametrize("config_path", HARVEST_TESTS)
def test_harvest(config_path):
    config = _load(config_path)

    # Setup
    test_obj = config['test']
    function = getattr(energy, test_obj['function'])

    # Run
    values = np.atleast_1d(function(**test_obj['kwargs']))

    # Asserts
    np.testing.assert_allclose(
        values, config['expected_output']['values'], rtol=config['settings']['rtol'])
