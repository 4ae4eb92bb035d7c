"""Exception types shared across the package."""


class FrakeError(Exception):
    """Base class for all errors raised by this package."""


class InputError(FrakeError):
    """User-correctable problem: bad configuration, unknown language, unreadable input."""


class ConfigError(InputError):
    """Invalid configuration value."""


class DatasetError(InputError):
    """Dataset path unreadable or contains no usable document/key pairs."""
