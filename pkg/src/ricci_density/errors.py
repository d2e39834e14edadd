"""Exception hierarchy shared by all modules."""


class DensityError(Exception):
    """Base class for every error raised by this package."""


class DegenerateInput(DensityError, ValueError):
    pass


class NonConvex(DensityError, ValueError):
    pass


class UnknownName(DensityError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class Unsupported(DensityError, NotImplementedError):
    pass


class PolytopeFormatError(DensityError, ValueError):
    """Malformed polytope JSON; ``field`` names the offending key."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class NoConvergence(DensityError, RuntimeError):
    pass


class BadBracket(DensityError, ValueError):
    pass


class PoleInBracket(DensityError, ValueError):
    pass


class PoleError(DensityError, ZeroDivisionError):
    pass


class SingularHessian(DensityError, RuntimeError):
    pass


class NonpositiveCurvature(DensityError, ValueError):
    pass


class NonpositiveVolume(DensityError, ValueError):
    pass


class NonpositiveDensity(DensityError, ValueError):
    pass
