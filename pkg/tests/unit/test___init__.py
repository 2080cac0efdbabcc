from unittest import TestCase
from unittest.mock import MagicMock

import numpy as np
import pandas as pd

from esampling import (
    ArgumentError, ConfigurationError, DomainError, InfeasibleError, OverloadWarning,
    check_valid_values, get_instance, get_qualified_name, scalarize, to_decibels,
    validate_random_state)
from esampling.psd import FlatPsd


class TestExceptions(TestCase):

    def test_errors_are_value_errors(self):
        """Every error of the package can be caught as a ValueError."""
        for error in (ArgumentError, DomainError, InfeasibleError, ConfigurationError):
            with self.subTest(error=error):
                assert issubclass(error, ValueError)

    def test_overload_is_a_runtime_warning(self):
        assert issubclass(OverloadWarning, RuntimeWarning)


class TestScalarize(TestCase):

    def test_decorator(self):
        """When applied to a function it allows it to work with scalars."""
        # Setup
        function = MagicMock()
        function.__doc__ = 'Docstring of the original function.'
        function.return_value = np.array([2.5])

        instance = MagicMock()
        args = ['positional', 'arguments']
        kwargs = {
            'keyword': 'arguments'
        }

        # Run (Decorator)
        scalarized_function = scalarize(function)

        # Check (Decorator)
        assert callable(scalarized_function)
        assert scalarized_function.__doc__ == 'Docstring of the original function.'

        # Run (Decorated function)
        result = scalarized_function(instance, 0, *args, **kwargs)

        # Check (Decorated function)
        assert result == 2.5
        assert isinstance(result, float)

        call_args = function.call_args[0]
        assert call_args[0] is instance
        np.testing.assert_array_equal(call_args[1], np.array([0.0]))
        assert call_args[2:] == tuple(args)
        assert function.call_args[1] == kwargs

        instance.assert_not_called()

    def test_array_passthrough(self):
        """Arrays are returned as arrays."""
        # Setup
        function = MagicMock(return_value=np.array([1.0, 2.0]))

        # Run
        result = scalarize(function)(MagicMock(), [1, 2])

        # Check
        np.testing.assert_array_equal(result, [1.0, 2.0])


class TestCheckValidValues(TestCase):

    def test_raises_if_nans(self):
        """check_valid_values raises an ArgumentError if is given data with nans."""
        # Setup
        X = np.array([
            [1.0, np.nan],
            [0.0, 1.0]
        ])
        function_mock = MagicMock()

        # Run
        decorated_function = check_valid_values(function_mock)

        # Check
        with self.assertRaises(ArgumentError):
            decorated_function(X)

        function_mock.assert_not_called()

    def test_raises_if_not_numeric(self):
        """check_valid_values raises an ArgumentError if given non numeric values."""
        # Setup
        X = np.array([
            [1.0, 'A'],
            [0.0, 1.0]
        ])
        function_mock = MagicMock()

        # Run
        decorated_function = check_valid_values(function_mock)

        # Check
        with self.assertRaises(ArgumentError):
            decorated_function(X)

        function_mock.assert_not_called()

    def test_raises_if_empty(self):
        """check_valid_values raises an ArgumentError if given data is empty."""
        # Setup
        function_mock = MagicMock()

        # Run
        decorated_function = check_valid_values(function_mock)

        # Check
        with self.assertRaises(ArgumentError):
            decorated_function(np.array([]))

        function_mock.assert_not_called()

    def test_dataframe(self):
        """DataFrames are checked on their values and passed through unchanged."""
        # Setup
        X = pd.DataFrame({'a': [1.0, 2.0], 'b': [3.0, 4.0]})
        function_mock = MagicMock(return_value='result')

        # Run
        result = check_valid_values(function_mock)(X)

        # Check
        assert result == 'result'
        function_mock.assert_called_once_with(X)


class TestValidateRandomState(TestCase):

    def test_seed(self):
        """The same seed gives generators that draw the same numbers."""
        # Run
        first = validate_random_state(42).normal(size=5)
        second = validate_random_state(np.int64(42)).normal(size=5)

        # Check
        np.testing.assert_array_equal(first, second)

    def test_generator_passthrough(self):
        # Setup
        generator = np.random.default_rng(0)

        # Run
        result = validate_random_state(generator)

        # Check
        assert result is generator

    def test_global_state_untouched(self):
        """Seeding a generator leaves the global numpy random state alone."""
        # Setup
        state = np.random.get_state()

        # Run
        validate_random_state(7).normal(size=10)

        # Check
        after = np.random.get_state()
        np.testing.assert_array_equal(state[1], after[1])
        assert state[2] == after[2]

    def test_invalid(self):
        with self.assertRaises(ArgumentError):
            validate_random_state('seed')
