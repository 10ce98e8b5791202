"""Exception types shared across the package."""


class Rank2BasesError(Exception):
    """Base class for all package-specific errors."""


class NotDivisibleError(Rank2BasesError, ArithmeticError):
    """Raised when an exact Laurent-polynomial division has a remainder."""


class NonTransversalError(Rank2BasesError):
    """Raised when a wall crossing is requested along a non-transversal direction."""


class PathOnWallError(Rank2BasesError):
    """Raised when a path endpoint lies on the support of a wall."""


class NonGenericEndpointError(Rank2BasesError):
    """Raised when a broken-line endpoint fails the genericity predicate."""


class NoGenericPointError(Rank2BasesError):
    """Raised when the deterministic perturbation schedule finds no generic point."""


class MalformedInputError(Rank2BasesError):
    """Raised when a structured input (e.g. a diagram) violates its contract."""


class InvariantViolationError(Rank2BasesError):
    """Raised when an internal mathematical invariant fails; indicates a bug."""
