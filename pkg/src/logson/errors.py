"""Exception types shared across the solvers and functional evaluators."""


class DegenerateFieldError(ValueError):
    """Raised when an operation requires a nonzero field (mass > 0)."""


class BracketFailureError(RuntimeError):
    """Raised when shooting cannot bracket the requested nodal branch.

    The message carries the bracket history so a caller can widen or
    shift the search window.
    """


class ConvergenceFailureError(RuntimeError):
    """Raised when an iterative solver stops without meeting its tolerance."""


class SingularLinearizationError(RuntimeError):
    """Raised when the Newton linearization has an eigenvalue at zero.

    The operator is reported as singular rather than silently
    regularized; callers may perturb the iterate or refine the grid.
    """
