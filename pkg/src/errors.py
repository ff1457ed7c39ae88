"""Exception hierarchy shared by the library and the CLI."""


class VertexRemovalError(Exception):
    pass


class DomainError(VertexRemovalError, ValueError):
    """A parameter or precondition is outside the operation's domain."""


class InvalidDistributionError(DomainError):
    pass


class OrderingError(DomainError):
    """Stochastic-order precondition failed at tail index ``index``."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class DegenerateInputError(DomainError):
    pass


class ParityError(DomainError):
    pass


class InfeasibleRemovalError(DomainError):
    pass


class NumericalError(VertexRemovalError, ArithmeticError):
    pass


class RegimeError(VertexRemovalError):
    pass


class NoGiantError(RegimeError):
    pass


class GraphInvariantError(VertexRemovalError):
    pass
