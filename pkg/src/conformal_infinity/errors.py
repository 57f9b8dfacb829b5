"""Exception types raised across the package."""


class ConformalError(ValueError):
    """Base class for every domain error raised here."""


class LightConeSingular(ConformalError):
    pass


class NotOnCone(ConformalError):
    pass


class ZeroVector(ConformalError):
    pass


class NotHermitian(ConformalError):
    pass


class NotUnitary(ConformalError):
    pass


class AtInfinity(ConformalError):
    pass


class NotUnimodular(ConformalError):
    pass


class NotPseudoUnitary(ConformalError):
    pass


class NotInGroup(ConformalError):
    pass


class NotIsotropic(ConformalError):
    pass


class DegenerateBasis(ConformalError):
    pass


class AtInfinityPoint(ConformalError):
    pass


class SourcePlane(ConformalError):
    pass


class ProjectionPole(ConformalError):
    pass


class UnknownGenerator(ConformalError):
    pass


class PoleInGrid(ConformalError):
    def __init__(self, message, cells=()):
        super().__init__(message)
        self.cells = list(cells)
