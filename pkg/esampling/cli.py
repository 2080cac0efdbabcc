"""Command-line front end.

Every sub-command reads a preset, optionally overridden by a flat YAML ``--config`` file,
itself overridden by command-line flags, and writes its result as CSV or JSON to
``--output`` or standard output. Failures exit with status 2 and a JSON error record.
"""

import argparse
import json
import logging
import sys

import numpy as np
import pandas as pd

from esampling import ConfigurationError, __version__
from esampling.energy import TimingPlan, acquisition_time, hold_energy
from esampling.presets import (
    CIRCUIT_FIELDS, HARVESTER_FIELDS, Preset, dump_preset, list_presets, load_preset,
    read_config)
from esampling.psd import PsdModel, load_table
from esampling.sampling import nmse_curve
from esampling.simulation import (
    ShapedGaussian, SimConfig, Sinusoid, average_consumption, coherent_frequency,
    run_simulation, sndr_fft, steady_voltage)
from esampling.tradeoff import (
    curve_frame, max_ratio_under_fidelity, min_nmse_under_energy, nyquist_energy_ratio,
    tradeoff_curve, tradeoff_family)

LOGGER = logging.getLogger(__name__)

DEFAULT_PRESET = 'paper-example'

#: Keys a config file may hold besides the circuit and harvester fields.
SETTING_KEYS = (
    'preset', 'psd', 'f_m', 'sigma', 'psd_table', 'bits', 'fs_grid', 'format', 'output',
    'delta', 'epsilon', 'fs', 'samples', 'duration', 'fft', 'input', 'seed', 'window',
)

LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)

#: Column names, with units, for the fields of an EnergyBudget.
ENERGY_COLUMNS = {
    'E_c': 'e_c_j',
    'E_sl': 'e_sl_j',
    'E_DAC': 'e_dac_j',
    'E_hold': 'e_hold_j',
    'a1': 'a1_j_per_v',
    'a2': 'a2_j_per_v2',
    'E_h': 'e_h_j',
    'E_ratio_db': 'e_ratio_db',
}


def _parse_bits(value):
    if value is None:
        return None

    if isinstance(value, (int, float)):
        return [int(value)]

    if isinstance(value, str):
        value = [item for item in value.split(',') if item.strip()]

    try:
        return [int(item) for item in value]
    except (TypeError, ValueError):
        raise ConfigurationError('Invalid bits list: {!r}'.format(value)) from None


def _parse_rate(token, nyquist):
    token = str(token).strip().lower()
    if token.endswith('nyquist'):
        factor = token[:-len('nyquist')]
        return (float(factor) if factor else 1.0) * nyquist

    return float(token)


def parse_fs_grid(value, nyquist):
    """Parse a sampling-rate grid.

    Accepts ``start:stop:count`` (a decreasing linear grid, where rates may be written as
    multiples of ``nyquist`` such as ``0.3nyquist``) or a comma-separated list.

    Returns:
        numpy.ndarray: Rates in Hz.
    """
    if isinstance(value, (list, tuple)):
        return np.array([_parse_rate(item, nyquist) for item in value])

    value = str(value)
    try:
        if ':' in value:
            start, stop, count = value.split(':')
            return np.linspace(_parse_rate(start, nyquist), _parse_rate(stop, nyquist),
                               int(count))

        return np.array([_parse_rate(item, nyquist) for item in value.split(',')])
    except ValueError:
        raise ConfigurationError('Invalid f_s grid: {!r}'.format(value)) from None


def _settings(args):
    settings = {}
    if args.config:
        settings = read_config(args.config)
        known = set(SETTING_KEYS) | set(CIRCUIT_FIELDS) | set(HARVESTER_FIELDS)
        unknown = set(settings) - known
        if unknown:
            message = 'Unknown keys in {}: {}'
            raise ConfigurationError(message.format(args.config, ', '.join(sorted(unknown))))

    for key in SETTING_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value

    return settings


def _preset(settings):
    preset = load_preset(settings.get('preset', DEFAULT_PRESET))
    overrides = {
        key: value for key, value in settings.items()
        if key in CIRCUIT_FIELDS or key in HARVESTER_FIELDS or key == 'f_m'
    }
    if not overrides:
        return preset

    params = preset.to_dict()
    params.update(overrides)
    LOGGER.info('Overriding preset %s with %s', preset.name, sorted(overrides))
    return Preset.from_dict(preset.name, params)


def _model(settings, preset):
    psd = str(settings.get('psd', 'flat')).lower()
    if psd == 'tabulated':
        if 'psd_table' not in settings:
            raise ConfigurationError('The tabulated PSD needs psd_table')

        return load_table(settings['psd_table'])

    params = {
        'psd_type': psd,
        'sigma_x2': preset.circuit.sigma_x2,
        'f_m': preset.f_m,
    }
    if psd == 'flat':
        if 'sigma' in settings:
            raise ConfigurationError('sigma does not apply to the flat PSD')
    elif 'sigma' in settings:
        params['sigma'] = float(settings['sigma'])
    elif psd == 'unimodal':
        params['sigma'] = preset.f_m / 3.0
    elif psd == 'multimodal':
        params['sigma'] = preset.f_m / 6.0

    return PsdModel(**params)


def _bits(settings, preset):
    return _parse_bits(settings.get('bits')) or [preset.circuit.n]


def _grid(settings, preset):
    if 'fs_grid' not in settings:
        raise ConfigurationError('This command needs --fs-grid')

    return parse_fs_grid(settings['fs_grid'], 2.0 * preset.f_m)


def _nmse(settings):
    preset = _preset(settings)
    model = _model(settings, preset)
    bits = _parse_bits(settings.get('bits'))
    n = bits[0] if bits else None
    return nmse_curve(model, _grid(settings, preset), n=n)


def _energy(settings):
    preset = _preset(settings)
    rows = []
    for n in _bits(settings, preset):
        circuit = preset.circuit.with_bits(n)
        row = {'n': n, 'T_aq_s': acquisition_time(circuit)}
        budget = hold_energy(circuit).to_dict()
        row.update({
            ENERGY_COLUMNS[key]: value for key, value in budget.items() if value is not None})
        if 'fs' in settings:
            model = _model(settings, preset)
            point = tradeoff_curve(model, circuit, preset.harvester, [float(settings['fs'])])[0]
            row['f_s_hz'] = point.f_s
            row['e_h_j'] = point.E_h
            row['e_ratio_db'] = point.E_ratio_db

        rows.append(row)

    return pd.DataFrame(rows)


def _tradeoff(settings):
    preset = _preset(settings)
    model = _model(settings, preset)
    bits = _bits(settings, preset)
    harvester = preset.harvester
    if 'delta' in settings or 'epsilon' in settings:
        points = []
        for n in bits:
            circuit = preset.circuit.with_bits(n)
            if 'delta' in settings:
                point = min_nmse_under_energy(model, circuit, harvester, float(settings['delta']))
            else:
                epsilon = float(settings['epsilon'])
                point = max_ratio_under_fidelity(model, circuit, harvester, epsilon)

            points.append(point)

        frame = curve_frame(points)
        frame.insert(0, 'n', bits)
        return frame

    return tradeoff_family(model, preset.circuit, harvester, bits, _grid(settings, preset))


def _nyquist(settings):
    preset = _preset(settings)
    model = _model(settings, preset)
    rows = []
    for n in _bits(settings, preset):
        ratio = nyquist_energy_ratio(model, preset.circuit.with_bits(n), preset.harvester)
        LOGGER.info('n=%s: %.2f dB at Nyquist', n, ratio)
        rows.append({'n': n, 'e_ratio_db': ratio})

    return pd.DataFrame(rows)


def _input(settings, preset, circuit, f_s, n_fft):
    spec = str(settings.get('input', 'sinusoid:{}'.format(preset.f_m)))
    kind, _, rest = spec.partition(':')
    kind = kind.strip().lower()
    if kind in ('gaussian', 'shaped'):
        return ShapedGaussian(_model(settings, preset), seed=int(settings.get('seed', 0)))

    if kind != 'sinusoid':
        raise ConfigurationError('Unknown input {!r}; use sinusoid:F[:A[:OFFSET]]'.format(spec))

    values = [float(item) for item in rest.split(':') if item]
    if not values:
        raise ConfigurationError('A sinusoid needs a frequency')

    half = circuit.V_ref / 2.0
    frequency = values[0]
    amplitude = values[1] if len(values) > 1 else half
    offset = values[2] if len(values) > 2 else half
    if n_fft and settings.get('window') is None:
        frequency = coherent_frequency(frequency, f_s, n_fft)
        LOGGER.info('Input moved to the coherent frequency %s Hz', frequency)

    return Sinusoid(frequency=frequency, offset=offset, amplitude=amplitude)


def _run(settings, n_fft):
    preset = _preset(settings)
    circuit = preset.circuit.with_bits(_bits(settings, preset)[0])
    f_s = float(settings.get('fs', 2.0 * preset.f_m))
    plan = TimingPlan.from_sampling_rate(acquisition_time(circuit), f_s)
    if 'duration' in settings:
        length = {'duration': float(settings['duration'])}
    else:
        length = {'n_samples': int(settings.get('samples', 4096))}

    config = SimConfig(
        circuit=circuit,
        harvester=preset.harvester,
        plan=plan,
        input=_input(settings, preset, circuit, f_s, n_fft),
        **length
    )
    return run_simulation(config)


def _write_frame(frame, path):
    if path:
        frame.to_csv(path, index=False)
        LOGGER.info('Wrote %s rows to %s', len(frame), path)


def _simulate(settings, args):
    n_fft = settings.get('fft')
    n_fft = int(n_fft) if n_fft else None
    trace = _run(settings, n_fft)

    summary = {
        'n_samples': len(trace),
        'f_s_hz': trace.f_s,
        'steady_v_eh_v': steady_voltage(trace),
        'e_consumed_per_sample_j': average_consumption(trace),
        'e_harvested_total_j': float(trace.e_harvested[-1]) if len(trace) else 0.0,
        'transfers': len(trace.transfers),
        'overload_count': trace.overload_count,
    }
    _write_frame(trace.to_frame(), args.ledger)
    _write_frame(trace.codes_frame(), args.codes)
    _write_frame(trace.transfers_frame(), args.transfers)
    if n_fft:
        result = sndr_fft(trace, n_fft, settings.get('window'))
        summary.update(result.to_dict())
        _write_frame(result.spectrum, args.spectrum)

    return summary


def _sndr(settings, args):
    n_fft = int(settings.get('fft', 1024))
    settings.setdefault('samples', n_fft)
    trace = _run(settings, n_fft)
    result = sndr_fft(trace, n_fft, settings.get('window'))
    LOGGER.info('SNDR %.2f dB, ENOB %.2f, noise floor %.2f dB below the tone',
                result.sndr_db, result.enob, result.noise_floor_gap_db)
    if args.summary:
        with open(args.summary, 'w', encoding='utf-8') as summary_file:
            json.dump(_json_ready(result.to_dict()), summary_file, indent=2, allow_nan=False)

    return result.spectrum


def _presets(settings, args):
    if args.dump:
        dump_preset(settings.get('preset', DEFAULT_PRESET), args.dump)

    frame = pd.DataFrame.from_dict(list_presets(), orient='index')
    frame.index.name = 'preset'
    return frame.reset_index()


def _json_ready(value):
    """Turn numpy scalars into Python ones and non-finite floats into ``null``."""
    if isinstance(value, dict):
        return {key: _json_ready(item) for key, item in value.items()}

    if isinstance(value, (list, tuple)):
        return [_json_ready(item) for item in value]

    if isinstance(value, np.bool_):
        return bool(value)

    if isinstance(value, np.integer):
        return int(value)

    if isinstance(value, (float, np.floating)):
        return float(value) if np.isfinite(value) else None

    return value


def _to_records(result):
    if isinstance(result, pd.DataFrame):
        return result.to_dict(orient='records')

    return result


def emit(result, fmt='csv', output=None):
    """Write a DataFrame or a flat record as CSV or JSON."""
    if fmt not in ('csv', 'json'):
        raise ConfigurationError('Unknown format {!r}; use csv or json'.format(fmt))

    if fmt == 'json':
        records = _json_ready(_to_records(result))
        text = json.dumps(records, indent=2, allow_nan=False) + '\n'
    else:
        frame = result if isinstance(result, pd.DataFrame) else pd.DataFrame([result])
        text = frame.to_csv(index=False)

    if output:
        with open(output, 'w', encoding='utf-8', newline='') as output_file:
            output_file.write(text)
    else:
        sys.stdout.write(text)


COMMANDS = {
    'nmse': lambda settings, args: _nmse(settings),
    'energy': lambda settings, args: _energy(settings),
    'tradeoff': lambda settings, args: _tradeoff(settings),
    'nyquist': lambda settings, args: _nyquist(settings),
    'simulate': _simulate,
    'sndr': _sndr,
    'presets': _presets,
}


def _common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--preset', help='preset name (default: paper-example)')
    common.add_argument('--config', help='flat YAML file with settings and parameters')
    common.add_argument('--psd', choices=['flat', 'unimodal', 'multimodal', 'tabulated'])
    common.add_argument('--psd-table', dest='psd_table', help='CSV table for --psd tabulated')
    common.add_argument('--f-m', dest='f_m', type=float, help='maximal frequency [Hz]')
    common.add_argument('--sigma', type=float, help='Gaussian lobe width [Hz]')
    common.add_argument('--bits', help='comma-separated resolutions, e.g. 8,10,12')
    common.add_argument('--format', choices=['csv', 'json'])
    common.add_argument('--output', help='output file (default: standard output)')
    common.add_argument('--error-file', dest='error_file', help='write error records here')
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='-v for INFO, -vv for DEBUG')
    return common


def _simulation_arguments(parser):
    parser.add_argument('--input', help='sinusoid:F[:A[:OFFSET]] or gaussian')
    parser.add_argument('--fs', type=float, help='sampling rate [Hz]')
    parser.add_argument('--samples', type=int, help='number of sampling periods')
    parser.add_argument('--duration', type=float, help='simulated time [s]')
    parser.add_argument('--seed', type=int, help='seed of the shaped Gaussian input')
    parser.add_argument('--window', help='scipy.signal window name for the FFT')


def setup_parser():
    common = _common_parser()
    parser = argparse.ArgumentParser(prog='esampling', description='Energy harvesting SAR ADC '
                                     'sampling tradeoffs and simulation')
    parser.add_argument('--version', action='version', version=__version__)
    subs = parser.add_subparsers(dest='command', required=True)

    nmse_parser = subs.add_parser('nmse', parents=[common], help='Sampling NMSE curve')
    nmse_parser.add_argument('--fs-grid', dest='fs_grid', help='start:stop:count or a list')

    energy = subs.add_parser('energy', parents=[common], help='Per-sample energy budget')
    energy.add_argument('--fs', type=float, help='also evaluate harvesting at this rate')

    tradeoff = subs.add_parser('tradeoff', parents=[common], help='NMSE versus energy ratio')
    tradeoff.add_argument('--fs-grid', dest='fs_grid', help='start:stop:count or a list')
    constraint = tradeoff.add_mutually_exclusive_group()
    constraint.add_argument('--delta', type=float, help='minimal linear energy ratio')
    constraint.add_argument('--epsilon', type=float, help='maximal NMSE')

    subs.add_parser('nyquist', parents=[common], help='Energy ratio at the Nyquist rate')

    simulate = subs.add_parser('simulate', parents=[common], help='Time-domain simulation')
    _simulation_arguments(simulate)
    simulate.add_argument('--fft', type=int, help='also measure SNDR with this FFT length')
    simulate.add_argument('--ledger', help='CSV file for the voltage and energy ledgers')
    simulate.add_argument('--codes', help='CSV file for the output codes')
    simulate.add_argument('--transfers', help='CSV file for the energy transfers')
    simulate.add_argument('--spectrum', help='CSV file for the spectrum (with --fft)')

    sndr = subs.add_parser('sndr', parents=[common], help='SNDR spectrum of a simulation')
    _simulation_arguments(sndr)
    sndr.add_argument('--fft', type=int, help='FFT length (default: 1024)')
    sndr.add_argument('--summary', help='JSON file for the SNDR and ENOB figures')

    presets = subs.add_parser('presets', parents=[common], help='List presets')
    presets.add_argument('--dump', help='write the --preset parameters to this YAML file')

    return parser


def _report_error(error, path):
    record = json.dumps({'error': type(error).__name__, 'message': str(error)})
    if path:
        with open(path, 'w', encoding='utf-8') as error_file:
            error_file.write(record + '\n')
    else:
        sys.stderr.write(record + '\n')


def main(argv=None):
    args = setup_parser().parse_args(argv)
    logging.basicConfig(
        level=LOG_LEVELS[min(args.verbose, len(LOG_LEVELS) - 1)],
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )
    LOGGER.info("Running '%s'", args.command)

    try:
        settings = _settings(args)
        result = COMMANDS[args.command](settings, args)
        emit(result, settings.get('format', 'csv'), settings.get('output'))
    except (ValueError, OSError) as error:
        LOGGER.debug('Command failed', exc_info=True)
        _report_error(error, args.error_file)
        return 2

    return 0


if __name__ == '__main__':
    sys.exit(main())
