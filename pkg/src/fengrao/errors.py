"""Exception types shared across the package."""


class FengRaoError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(FengRaoError):
    """Malformed input (empty generator list, non-positive r, ...)."""


class NotNumerical(FengRaoError):
    """The generators do not define a numerical semigroup (gcd != 1)."""


class NotElement(FengRaoError):
    """A value required to be a semigroup element is not one."""


class InvalidRange(FengRaoError):
    """An interval precondition such as c <= x <= y does not hold."""


class BaseTooSmall(FengRaoError):
    """The base m is below 2c-1, where the machinery is not guaranteed."""


class InvalidParams(FengRaoError):
    """Interval-semigroup parameters out of range (need 0 < b < a, ...)."""


class NotAmenable(FengRaoError):
    """A configuration required to be amenable is not."""


class NoOrderedAmenable(FengRaoError):
    """No ordered amenable set of the requested size exists."""


class SearchSpaceTooLarge(FengRaoError):
    """Exhaustive search would exceed the configured subset cap."""
