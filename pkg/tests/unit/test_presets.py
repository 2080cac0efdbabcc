import os
import tempfile
from unittest import TestCase
from unittest.mock import patch

import numpy as np

from esampling import ConfigurationError
from esampling.energy import EfficiencyMode
from esampling.presets import (
    PAPER_EXAMPLE, PRESET_DIR_VARIABLE, Preset, dump_preset, list_presets, load_preset,
    load_preset_file, preset_names, read_config)


class TestPaperExample(TestCase):

    def test_fields(self):
        # Run
        preset = load_preset('paper-example')

        # Check
        assert preset is PAPER_EXAMPLE
        assert preset.f_m == 19.8e6
        assert preset.circuit.n == 8
        assert preset.circuit.V_ref == 0.8
        assert np.isclose(preset.circuit.K, np.sqrt(20.0))
        assert preset.circuit.t_aq_override == 2.5e-9
        assert preset.harvester.R_h == 23.75
        assert preset.harvester.eta == 0.7
        assert preset.harvester.efficiency_mode is EfficiencyMode.FIXED

    def test_to_dict_from_dict(self):
        # Run
        result = Preset.from_dict('copy', PAPER_EXAMPLE.to_dict())

        # Check
        assert result.circuit == PAPER_EXAMPLE.circuit
        assert result.harvester == PAPER_EXAMPLE.harvester
        assert result.f_m == PAPER_EXAMPLE.f_m

    def test_from_dict_missing_f_m(self):
        params = PAPER_EXAMPLE.to_dict()
        del params['f_m']

        with self.assertRaises(ConfigurationError):
            Preset.from_dict('broken', params)

    def test_from_dict_unknown_key(self):
        params = PAPER_EXAMPLE.to_dict()
        params['colour'] = 'blue'

        with self.assertRaisesRegex(ConfigurationError, 'colour'):
            Preset.from_dict('broken', params)

    def test_from_dict_incomplete(self):
        params = PAPER_EXAMPLE.to_dict()
        del params['C_u']

        with self.assertRaises(ConfigurationError):
            Preset.from_dict('broken', params)


class TestLoadPreset(TestCase):

    def test_unknown_lists_available(self):
        """An unknown name raises and lists the available presets."""
        with self.assertRaisesRegex(ConfigurationError, 'paper-example'):
            load_preset('missing')

    def test_dump_and_reload(self):
        """A dumped preset is available again from the preset directory."""
        with tempfile.TemporaryDirectory() as directory:
            # Setup
            dump_preset('paper-example', os.path.join(directory, 'mine.yaml'))

            # Run
            with patch.dict(os.environ, {PRESET_DIR_VARIABLE: directory}):
                names = preset_names()
                preset = load_preset('mine')
                listed = list_presets()

            # Check
            assert names == ['paper-example', 'mine']
            assert preset.name == 'mine'
            assert preset.circuit == PAPER_EXAMPLE.circuit
            assert preset.harvester == PAPER_EXAMPLE.harvester
            assert listed['mine']['efficiency_mode'] == 'FIXED'

    def test_builtin_names_win(self):
        """A file cannot shadow a built-in preset."""
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'paper-example.yaml')
            with open(path, 'w') as preset_file:
                preset_file.write('f_m: 1.0\n')

            with patch.dict(os.environ, {PRESET_DIR_VARIABLE: directory}):
                assert load_preset('paper-example') is PAPER_EXAMPLE
                assert preset_names() == ['paper-example']

    def test_missing_directory(self):
        with patch.dict(os.environ, {PRESET_DIR_VARIABLE: '/does/not/exist'}):
            assert preset_names() == ['paper-example']

    def test_load_preset_file(self):
        with tempfile.TemporaryDirectory() as directory:
            # Setup
            path = os.path.join(directory, 'fast.yaml')
            dump_preset(PAPER_EXAMPLE, path)

            # Run
            preset = load_preset_file(path)

        # Check
        assert preset.name == 'fast'
        assert preset.circuit.n == 8


class TestReadConfig(TestCase):

    def test_exponents_without_dot(self):
        """Values like 10e-15, which YAML reads as strings, are parsed as floats."""
        with tempfile.TemporaryDirectory() as directory:
            # Setup
            path = os.path.join(directory, 'config.yaml')
            with open(path, 'w') as config_file:
                config_file.write('C_u: 10e-15\nn: 8\npsd: unimodal\n')

            # Run
            config = read_config(path)

        # Check
        assert config == {'C_u': 10e-15, 'n': 8, 'psd': 'unimodal'}

    def test_empty(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'empty.yaml')
            open(path, 'w').close()

            assert read_config(path) == {}

    def test_not_a_mapping(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'list.yaml')
            with open(path, 'w') as config_file:
                config_file.write('- 1\n- 2\n')

            with self.assertRaises(ConfigurationError):
                read_config(path)
