"""Named parameter sets for the converter and the harvester.

Besides the built-in presets, every ``<name>.yaml`` file in the directory named by the
``ESAMPLING_PRESET_DIR`` environment variable is available as preset ``<name>``. Preset
files are flat documents holding the fields of :class:`AdcCircuitParams` and
:class:`HarvesterParams` plus ``f_m``, all in SI base units.
"""

import logging
import os
from dataclasses import dataclass, fields
from pathlib import Path

import numpy as np
import yaml

from esampling import ConfigurationError
from esampling.energy import AdcCircuitParams, EfficiencyMode, HarvesterParams

LOGGER = logging.getLogger(__name__)

PRESET_DIR_VARIABLE = 'ESAMPLING_PRESET_DIR'

CIRCUIT_FIELDS = tuple(item.name for item in fields(AdcCircuitParams))
HARVESTER_FIELDS = tuple(item.name for item in fields(HarvesterParams))


@dataclass(frozen=True)
class Preset:
    """A converter, a harvester and the input bandwidth they were designed for."""

    name: str
    circuit: AdcCircuitParams
    harvester: HarvesterParams
    f_m: float

    def to_dict(self):
        """Flat dict with every field, suitable for a preset file."""
        params = dict(self.circuit.to_dict())
        params.update(self.harvester.to_dict())
        params['f_m'] = self.f_m
        return params

    @classmethod
    def from_dict(cls, name, params):
        params = dict(params)
        if 'f_m' not in params:
            raise ConfigurationError('Preset {} does not define f_m'.format(name))

        f_m = float(params.pop('f_m'))
        unknown = set(params) - set(CIRCUIT_FIELDS) - set(HARVESTER_FIELDS)
        if unknown:
            message = 'Unknown keys in preset {}: {}'
            raise ConfigurationError(message.format(name, ', '.join(sorted(unknown))))

        circuit = {key: value for key, value in params.items() if key in CIRCUIT_FIELDS}
        harvester = {key: value for key, value in params.items() if key in HARVESTER_FIELDS}
        try:
            return cls(
                name=name,
                circuit=AdcCircuitParams.from_dict(circuit),
                harvester=HarvesterParams.from_dict(harvester),
                f_m=f_m,
            )
        except TypeError as error:
            raise ConfigurationError('Incomplete preset {}: {}'.format(name, error)) from None


PAPER_EXAMPLE = Preset(
    name='paper-example',
    circuit=AdcCircuitParams(
        n=8,
        C_u=10e-15,
        C_c=5e-15,
        C_s=0.7e-15,
        g=0.4,
        A_k=1.8,
        V_e=0.05,
        alpha_tau=5.0,
        V_ref=0.8,
        K=float(np.sqrt(20.0)),
        t_aq_override=2.5e-9,
    ),
    harvester=HarvesterParams(
        R_h=23.75,
        C_EH=40e-9,
        efficiency_mode=EfficiencyMode.FIXED,
        eta=0.7,
        transfer_period_samples=337,
        transfer_dead_time=1.5e-6,
    ),
    f_m=19.8e6,
)

BUILTIN_PRESETS = {
    PAPER_EXAMPLE.name: PAPER_EXAMPLE,
}


def _preset_dir():
    path = os.environ.get(PRESET_DIR_VARIABLE)
    return Path(path) if path else None


def _coerce(value):
    # YAML 1.1 reads exponents without a dot, like 10e-15, as strings
    if isinstance(value, str):
        try:
            return float(value)
        except ValueError:
            return value

    return value


def read_config(path):
    """Read a flat YAML document into a dict, parsing numeric strings as floats.

    Raises:
        ConfigurationError: if the file does not hold a key-value document.
    """
    with open(path, 'r', encoding='utf-8') as config_file:
        data = yaml.safe_load(config_file)

    if data is None:
        return {}

    if not isinstance(data, dict):
        raise ConfigurationError('{} must hold a key-value document'.format(path))

    return {str(key): _coerce(value) for key, value in data.items()}


def _user_presets():
    directory = _preset_dir()
    if directory is None:
        return {}

    if not directory.is_dir():
        LOGGER.warning('%s=%s is not a directory', PRESET_DIR_VARIABLE, directory)
        return {}

    return {path.stem: path for path in sorted(directory.glob('*.yaml'))}


def preset_names():
    """Names of every available preset, built-in ones first."""
    names = list(BUILTIN_PRESETS)
    names.extend(name for name in _user_presets() if name not in BUILTIN_PRESETS)
    return names


def load_preset(name):
    """Load a preset by name.

    Args:
        name (str): Built-in preset name or stem of a file in ``ESAMPLING_PRESET_DIR``.

    Returns:
        Preset: The requested parameter set.

    Raises:
        ConfigurationError: if the preset does not exist or is invalid.
    """
    if name in BUILTIN_PRESETS:
        return BUILTIN_PRESETS[name]

    path = _user_presets().get(name)
    if path is None:
        message = 'Unknown preset {!r}. Available presets: {}'
        raise ConfigurationError(message.format(name, ', '.join(preset_names())))

    LOGGER.info('Loading preset %s from %s', name, path)
    return Preset.from_dict(name, read_config(path))


def load_preset_file(path):
    """Load a preset straight from a YAML file."""
    path = Path(path)
    return Preset.from_dict(path.stem, read_config(path))


def list_presets():
    """Dump every available preset.

    Returns:
        dict: Preset name to flat parameter dict.
    """
    return {name: load_preset(name).to_dict() for name in preset_names()}


def dump_preset(preset, path):
    """Write ``preset`` (a :class:`Preset` or a preset name) to a reloadable YAML file."""
    if isinstance(preset, str):
        preset = load_preset(preset)

    with open(path, 'w', encoding='utf-8') as preset_file:
        yaml.safe_dump(preset.to_dict(), preset_file, default_flow_style=False)

    LOGGER.info('Preset %s written to %s', preset.name, path)
