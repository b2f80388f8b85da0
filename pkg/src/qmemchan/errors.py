"""Exception types shared across the package."""


class InvalidStateError(ValueError):
    """A matrix claimed to be a density matrix violates its invariants."""


class InvalidParameterError(ValueError):
    """A channel / chain parameter lies outside its admissible range."""
