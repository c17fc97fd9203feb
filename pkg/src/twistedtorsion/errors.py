"""Exception hierarchy.

Each exception carries the process exit code the command-line front end
reports for it, so library callers and the CLI agree on failure classes.
"""


class TorsionError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1


class ValidationError(TorsionError, ValueError):
    """Input failed schema or cross-validation (bad rep, bad phi, ...)."""

    exit_code = 2


class ParseError(ValidationError):
    """Text could not be parsed as a word, number or polynomial."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ConductorMismatchError(ValidationError):
    """A root of unity of order q was requested in a field whose conductor
    is not a multiple of q."""

    def __init__(self, q, conductor):
        super().__init__(
            f"root of unity of order {q} does not live in Q(zeta_{conductor}); "
            f"enlarge the conductor to a multiple of {q}"
        )
        self.q = q
        self.conductor = conductor


class NotAcyclicError(TorsionError):
    """The twisted chain complex has nontrivial homology."""

    exit_code = 3

    def __init__(self, message="twisted complex not acyclic - torsion undefined", character=None):
        if character is not None:
            message = f"{message} (character {character})"
        super().__init__(message)
        self.character = character


class UnsupportedPresentationError(TorsionError):
    """The presentation has the wrong shape (deficiency != 1, ...)."""

    exit_code = 4


class DeficiencyError(UnsupportedPresentationError):
    """Reidemeister-Schreier rewriting could not certify deficiency one."""


class NotDivisibleError(ArithmeticError):
    """Raised by exact division when the divisor does not divide."""
