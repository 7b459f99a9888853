"""Exception hierarchy shared across the package.

The classes map onto the CLI exit codes: input/schema problems exit 2,
configuration problems exit 3, numeric failures exit 4.
"""


class TourvalError(Exception):
    """Base class for all errors raised by this package."""


class InputError(TourvalError):
    """Malformed or inconsistent input data (bad rows, unknown ids, ...)."""

    exit_code = 2


class OutOfRangeError(InputError):
    """A value lies outside the source range it was declared to be in."""


class ConfigError(TourvalError):
    """Invalid configuration: bad parameter values, weight-sum violations,
    unknown method tags, missing referenced files."""

    exit_code = 3


class NumericError(TourvalError):
    """A numeric procedure failed to converge."""

    exit_code = 4
