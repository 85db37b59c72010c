"""Exception hierarchy for polyorbit."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NoSuchPointError(DomainError):
    """The requested angle has no point on this branch of the conic."""


class NotAnEllipseError(DomainError):
    """Operation defined only for ellipses (0 < e < 1)."""


class DegenerateOrbitError(DomainError):
    """Radial launch (zero angular momentum); not a conic orbit."""


class UnboundedOrbitError(DomainError):
    """Operation defined only for bound (elliptical/circular) orbits."""


class UnreachableRadiusError(DomainError):
    """The orbit never attains the requested radius."""


class OutsideOnlyError(DomainError):
    """Shell/sphere attraction is only defined for exterior points."""


class CollisionError(RuntimeError):
    """Simulated body fell inside the collision radius of the attractor."""

    def __init__(self, step: int, radius: float):
        self.step = step
        self.radius = radius
        super().__init__(f"collision with attractor at step {step} (r < {radius:g})")
