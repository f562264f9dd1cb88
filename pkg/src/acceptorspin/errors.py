"""Exception hierarchy shared by all modules.

Validation errors cover bad inputs and out-of-regime requests (CLI exit
code 1); numerical errors cover non-convergence and singular systems
(CLI exit code 2).
"""


class AcceptorSpinError(Exception):
    """Base class for all package errors."""


class ValidationError(AcceptorSpinError, ValueError):
    """Invalid input value or configuration."""


class RegimeError(ValidationError):
    """Inputs outside the physical regime an operation supports."""


class NumericalError(AcceptorSpinError, RuntimeError):
    """Numerical procedure failed (non-convergence, singular system)."""


class NonConvergenceError(NumericalError):
    """Iterative solver exhausted its budget without converging."""


class NonUniqueSteadyStateError(NumericalError):
    """Stationary state of the master equation is not unique."""


class NoDephasingError(AcceptorSpinError):
    """Zero nuclear-field variance: no hyperfine dephasing to report."""
