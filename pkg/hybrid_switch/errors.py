"""Exception types raised by hybrid_switch.

All of them are ``ValueError`` subclasses so callers that only care about bad input can
catch the built-in type. The CLI maps them to exit code 2.
"""


class PhysicsDomainError(ValueError):
    """A physical input is outside its domain (non-positive density, temperature, ...)."""


class AddressError(ValueError):
    """Unknown junction id or a gate voltage beyond the source range."""


class ManifestError(ValueError):
    """A chip manifest violates the schema; the message names the field and line."""

    def __init__(self, message: str, *, field: str | None = None, line: int | None = None):
        location = []
        if field is not None:
            location.append(f"field {field!r}")
        if line is not None:
            location.append(f"line {line}")
        prefix = f"{', '.join(location)}: " if location else ""
        super().__init__(prefix + message)
        self.detail = message
        self.field = field
        self.line = line


class TraceFormatError(ValueError):
    """A trace file does not follow the trace CSV format."""


class ExtractionError(ValueError):
    """A trace or data set lacks what a metric extraction requires."""


class ConfigError(ValueError):
    """Invalid run, failure or analysis configuration."""


class LockinError(ValueError):
    """The lock-in integration window is too short."""
