from esampling.simulation.config import HOLD_SUBSTEPS, ShapedGaussian, SimConfig, Sinusoid
from esampling.simulation.engine import (
    SimTrace, Transfer, average_consumption, consumed_energy_ledger, run_simulation,
    steady_voltage)
from esampling.simulation.reconstruction import (
    empirical_nmse, ideal_lowpass, reconstruct, reconstruct_samples)
from esampling.simulation.sar import (
    Conversion, average_dac_energy, dac_energy_table, quantize, sar_convert, switching_energy)
from esampling.simulation.spectrum import (
    SndrResult, coherent_frequency, sndr_fft, sndr_from_samples)
from esampling.simulation.synthesis import shaped_noise, spectral_amplitudes, synthesize

__all__ = (
    'HOLD_SUBSTEPS',
    'Conversion',
    'ShapedGaussian',
    'SimConfig',
    'SimTrace',
    'Sinusoid',
    'SndrResult',
    'Transfer',
    'average_consumption',
    'average_dac_energy',
    'coherent_frequency',
    'consumed_energy_ledger',
    'dac_energy_table',
    'empirical_nmse',
    'ideal_lowpass',
    'quantize',
    'reconstruct',
    'reconstruct_samples',
    'run_simulation',
    'sar_convert',
    'shaped_noise',
    'sndr_fft',
    'sndr_from_samples',
    'spectral_amplitudes',
    'steady_voltage',
    'switching_energy',
    'synthesize',
)
