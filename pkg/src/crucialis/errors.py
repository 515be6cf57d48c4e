"""Exception types shared across the package."""


class CrucialisError(Exception):
    """Base class for all package-specific errors."""


class ParseError(CrucialisError, ValueError):
    """Word text could not be parsed in the requested format."""


class FormatError(CrucialisError, ValueError):
    """Word cannot be rendered in the requested format (e.g. compact with n > 9)."""


class DomainError(CrucialisError, ValueError):
    """Arguments fall outside an operation's validity domain."""


class CapacityError(CrucialisError):
    """A construction would exceed the configured length cap."""


class NotCrucialError(CrucialisError):
    """The word is not crucial, so the requested analysis is undefined."""


class NamingError(CrucialisError):
    """The suffix chain is not nested under the current letter naming.

    Calling normalize() first and retrying on its output resolves this.
    """


class NonNestedError(CrucialisError):
    """Two letters have minimal completing suffixes of equal length.

    Strict nesting of the suffix chain is then impossible under any renaming.
    Carries the pair of letters involved.
    """

    def __init__(self, letter_a: int, letter_b: int):
        self.letters = (letter_a, letter_b)
        super().__init__(
            f"letters {letter_a} and {letter_b} have equal minimal suffix lengths; "
            "the suffix chain cannot be strictly nested"
        )


class IncompleteChainError(CrucialisError):
    """The longest suffix in the chain does not span the whole word.

    Happens for non-minimal crucial words; the decomposition type requires
    the final suffix to equal the input word.
    """


class BudgetExhaustedError(CrucialisError):
    """A node or time budget tripped while a stream was being produced."""
