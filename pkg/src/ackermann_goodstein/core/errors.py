"""Exception hierarchy for the Ackermannian Goodstein toolkit.

Every error raised on purpose by the library derives from GoodsteinError,
so callers (the CLI in particular) can catch the whole family at once.
Argument-shaped failures also subclass ValueError.
"""


class GoodsteinError(Exception):
    """Base class for all toolkit errors."""


class BaseTooSmall(GoodsteinError, ValueError):
    """Raised when an Ackermann base k is below 2."""

    def __init__(self, k: int) -> None:
        super().__init__(f"base must be at least 2, got {k}")
        self.k = k


class IterZeroOnSentinel(GoodsteinError, ValueError):
    """Raised when a zero-fold iterate is applied to MINUS_ONE."""

    def __init__(self) -> None:
        super().__init__("the 0-fold iterate of MINUS_ONE is not a natural number")


class ZeroInput(GoodsteinError, ValueError):
    """Raised when an operation needs a positive number and got 0."""


class ZeroTerm(GoodsteinError, ValueError):
    """Raised when an operation needs a nonzero term."""


class NotApplicable(GoodsteinError, ValueError):
    """Raised when an operation's structural precondition fails."""


class GuardViolated(GoodsteinError):
    """Raised when a right expansion is asked to be normal but is not."""


class Blowup(GoodsteinError):
    """Raised when a symbolic computation needs more than the budget allows."""


class BadBases(GoodsteinError, ValueError):
    """Raised when a base change does not go strictly upward."""

    def __init__(self, k: int, ell: int) -> None:
        super().__init__(f"base change needs 2 <= k < l, got k={k}, l={ell}")
        self.k = k
        self.ell = ell


class InvalidTerm(GoodsteinError, ValueError):
    """Raised when an ordinal term is not in Veblen normal form."""


class ZeroHasNoFS(GoodsteinError, ValueError):
    """Raised when asking for the fundamental sequence of zero."""

    def __init__(self) -> None:
        super().__init__("zero has no fundamental sequence")


class OracleOverflow(GoodsteinError, ArithmeticError):
    """Raised when a brute-force oracle value exceeds its digit cap."""


class TermSyntaxError(GoodsteinError, ValueError):
    """Raised by the term parsers, with the offending position."""

    def __init__(self, message: str, text: str, position: int) -> None:
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class UnknownSuite(GoodsteinError, ValueError):
    """Raised when a verification suite name is not registered."""

    def __init__(self, name: str, known: list[str]) -> None:
        super().__init__(f"unknown suite {name!r}, expected one of: {', '.join(known)}")
        self.name = name
