"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """Malformed graph data: bad vertex ids, self-loops, infeasible parameters."""


class PreconditionError(ValueError):
    """Input violates an operation's documented precondition."""


class CapExceededError(PreconditionError):
    """Input is larger than the configured cap for an exhaustive routine."""


class PartialColouringError(PreconditionError):
    """Edge colouring does not cover the host graph's edge set exactly."""


class ParseError(ValueError):
    """File could not be parsed; message carries the offending line number."""


class InternalInvariantError(RuntimeError):
    """An internal invariant broke; indicates a bug, not bad input."""
