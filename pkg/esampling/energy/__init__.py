from esampling import to_decibels as energy_ratio_db
from esampling.energy.consumption import (
    EnergyBudget, acquisition_time, comparator_energy, comparator_gamma, dac_energy_avg, dac_rho,
    hold_energy, min_hold_time, sar_logic_energy)
from esampling.energy.harvest import (
    charge_samples, check_signal_power, effective_harvest_per_sample, energy_ratio,
    energy_ratio_linear, harvest_capacitance, harvested_energy, harvester_efficiency_rc,
    optimal_capacitance_ratio)
from esampling.energy.params import AdcCircuitParams, EfficiencyMode, HarvesterParams, TimingPlan

__all__ = (
    'AdcCircuitParams',
    'EfficiencyMode',
    'EnergyBudget',
    'HarvesterParams',
    'TimingPlan',
    'acquisition_time',
    'charge_samples',
    'check_signal_power',
    'comparator_energy',
    'comparator_gamma',
    'dac_energy_avg',
    'dac_rho',
    'effective_harvest_per_sample',
    'energy_ratio',
    'energy_ratio_db',
    'energy_ratio_linear',
    'harvest_capacitance',
    'harvested_energy',
    'harvester_efficiency_rc',
    'hold_energy',
    'min_hold_time',
    'optimal_capacitance_ratio',
    'sar_logic_energy',
)
