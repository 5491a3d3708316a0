"""Error taxonomy shared by all modules.

Exit-code mapping used by the CLI: InvalidInput -> 2, mathematical
obstructions (Unsolvable, InconsistentFamily, NotInImage, ...) -> 3,
PrecisionExhausted -> 4.
"""


class LogpError(Exception):
    """Base class for all package errors."""


class InvalidInput(LogpError):
    """Malformed or out-of-contract input (bad JSON, wrong prime, ...)."""


class DivisionByZero(LogpError):
    """Inversion of an exactly-zero element."""


class PrecisionExhausted(LogpError):
    """Cancellation destroyed every tracked digit, or a certified answer
    would require digits that were never tracked."""


class InvalidAutomorphism(LogpError):
    """Galois substitution exponent not coprime to p."""


class OrderTooSmall(LogpError):
    """A series was tagged with a growth order too small to contain it."""


class NotInImage(LogpError):
    """Substitution inverse applied to a series outside the image, as far
    as the tracked digits can tell."""


class Unsolvable(LogpError):
    """The functional equation has no solution (resonant eigenvalue with a
    non-vanishing obstruction)."""


class SlopeTooLarge(LogpError):
    """Growth order h below -ord(lambda); the geometric series would not
    converge."""


class IndeterminateCase(LogpError):
    """lambda*p^i is indistinguishable from 1 at the working precision, so
    the resonant and non-resonant branches cannot be told apart."""


class InconsistentFamily(LogpError):
    """A family of points admits no interpolant at the tracked precision."""


#: Exceptions that signal a mathematical obstruction rather than bad input.
OBSTRUCTIONS = (
    DivisionByZero,
    InvalidAutomorphism,
    OrderTooSmall,
    NotInImage,
    Unsolvable,
    SlopeTooLarge,
    IndeterminateCase,
    InconsistentFamily,
)
