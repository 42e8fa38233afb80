"""Exception types shared across the package.

Errors that carry diagnostic payloads (offending index, discrete minimum,
available problem names) expose them as attributes so callers can react
programmatically instead of parsing messages.
"""

from __future__ import annotations


class UnknownProblemError(LookupError):
    """Raised when a problem identifier is not in the registry."""

    def __init__(self, name: str, available: list[str]):
        self.name = name
        self.available = list(available)
        super().__init__(
            f"unknown problem {name!r}; available: {', '.join(self.available)}"
        )


class DomainViolationError(ValueError):
    """Raised when a point lies outside a problem's box domain."""

    def __init__(self, coordinate_index: int, value: float, lower: float, upper: float):
        self.coordinate_index = coordinate_index
        self.value = value
        super().__init__(
            f"coordinate {coordinate_index} = {value} outside [{lower}, {upper}]"
        )


class ConfigurationError(ValueError):
    """Raised for invalid grid or solver configuration values."""


class EmptyLevelSetError(ValueError):
    """Raised when a threshold lies below the discrete minimum.

    Attributes:
        discrete_min: Smallest sampled value; any threshold >= this is valid.
    """

    def __init__(self, c: float, discrete_min: float):
        self.c = c
        self.discrete_min = discrete_min
        super().__init__(
            f"level set empty: threshold {c} below discrete minimum {discrete_min}"
        )


class NotConvergedError(RuntimeError):
    """Raised when an operation requires a converged solve trace."""


class UndefinedPurityError(ValueError):
    """Raised when purity is requested for an empty front."""


class UnsupportedDimensionError(ValueError):
    """Raised when hypervolume is requested for more than 3 objectives."""
