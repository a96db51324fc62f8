"""Exception hierarchy shared by the simulator modules."""


class ParameterError(ValueError):
    """A physical or campaign parameter is out of its valid range."""


class EmptyNetworkError(RuntimeError):
    """A layout holds no base station, so no SINR can be formed."""


class CampaignError(RuntimeError):
    """A Monte Carlo campaign produced no usable sample."""


class NumericalError(ArithmeticError):
    """Quadrature or root finding failed to converge.

    ``diagnostics`` carries whatever the underlying routine reported.
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}
