class PepysError(Exception):
    """Base exception class for the Pepys dice toolkit."""

    pass


class DomainError(PepysError, ValueError):
    """Raised when an argument lies outside the mathematical domain of an operation."""

    pass


class InvalidProbabilityError(DomainError):
    """Raised when a probability is unparsable or outside [0, 1]."""

    pass


class DegenerateProbabilityError(DomainError):
    """Raised when 0 < p < 1 is required but p is 0 or 1."""

    def __init__(self, message, probability=None):
        super().__init__(message)
        self.probability = probability


class PreconditionError(DomainError):
    """Raised when an operation's precondition does not hold."""

    pass


class EnumerationCapError(DomainError):
    """Raised when a brute-force enumeration would exceed the outcome cap."""

    def __init__(self, message, outcome_count: int, cap: int):
        super().__init__(message)
        self.outcome_count = outcome_count
        self.cap = cap


class NoSignChangeError(DomainError):
    """Raised when no bracket with a sign change is found for a crossover search."""

    def __init__(self, message, grid_size: int | None = None):
        super().__init__(message)
        self.grid_size = grid_size


class InvariantViolationError(PepysError, AssertionError):
    """Raised when an exact mathematical check fails."""

    pass


class ConfigError(PepysError):
    """Raised for configuration-related errors."""

    pass


class UnknownGeneratorError(ConfigError):
    """Raised when a simulation names a generator that is not available."""

    pass
