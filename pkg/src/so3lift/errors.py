"""Exception hierarchy shared by the library and the command-line front end."""


class So3LiftError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(So3LiftError, ValueError):
    """An input violates a numerical invariant (unitarity, orthogonality, norm...)."""


class NotAStateError(InvalidInputError):
    """A Bloch form assembles to a matrix that is not positive semidefinite."""


class PreconditionError(So3LiftError, ValueError):
    """A branch-specific routine was called outside its domain."""


class ConsistencyError(So3LiftError, ArithmeticError):
    """An internal self-check failed (residual blow-up, complex residue)."""
