"""Exception types shared by all kgi modules."""


class KgiError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(KgiError):
    """Operand shapes do not conform."""


class SizeError(KgiError):
    """A result would exceed the platform's addressable matrix size."""


class NumericalError(KgiError):
    """A numerical routine failed to converge."""


class FullRankError(KgiError):
    """No full-rank random factor was found within the redraw budget."""


class FormatError(KgiError):
    """A persisted file does not match its declared format."""


class InvariantError(KgiError):
    """A value violates a domain invariant."""


class InvalidVariantError(KgiError):
    """Encryption variant outside {1, 2, 3, 4}."""


class AgreementError(KgiError):
    """Factored and full computation paths disagree; benchmark rejected."""
