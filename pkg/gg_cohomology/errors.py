class GGError(Exception):
    """Base class for every failure raised by gg_cohomology."""


class InvalidWord(GGError, ValueError):
    pass


class UnsupportedGroup(GGError, ValueError):
    pass


class InvalidArity(GGError, ValueError):
    pass


class InvalidPattern(GGError, ValueError):
    pass


class InvalidDegree(GGError, ValueError):
    pass


class InvalidGenerator(GGError, ValueError):
    pass


class GroupMismatch(GGError, ValueError):
    pass


class InsufficientSamples(GGError, ValueError):
    pass


class InfeasibleEpsilon(GGError, ValueError):
    """Raised when a region layout cannot be built for the requested epsilon.

    Attributes:
        epsilon: The rejected value
        feasible_bound: Largest epsilon the layout accepts
    """

    def __init__(self, epsilon: float, feasible_bound: float):
        super().__init__(
            f"epsilon={epsilon} is not feasible for this layout; "
            f"epsilon must lie in (0, {feasible_bound:.6g}]"
        )
        self.epsilon = epsilon
        self.feasible_bound = feasible_bound


class BadPointNoPrediction(GGError, ValueError):
    pass


class UnsupportedSurface(GGError, ValueError):
    pass


class InvalidConfig(GGError, ValueError):
    pass


class DegenerateTether(GGError, RuntimeError):
    pass


class GenericPositionFailure(GGError, RuntimeError):
    pass


class ImpureBraid(GGError, RuntimeError):
    pass


class AuditFailure(GGError, RuntimeError):
    pass
