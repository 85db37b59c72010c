"""Numerical verification that a uniform spherical shell attracts external
points like a point mass at its center.

The shell is cut into thin rings by uniform polar-angle panels; each ring's
pull is resolved along the symmetry axis (the transverse parts cancel ring by
ring by construction) and summed with the midpoint rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, OutsideOnlyError


@dataclass(frozen=True)
class ShellSpec:
    """A thin uniform spherical shell: radius, total mass, gravity constant."""

    radius: float
    total_mass: float
    g: float

    def __post_init__(self):
        for name, val in (("radius", self.radius), ("total_mass", self.total_mass),
                          ("g", self.g)):
            if not math.isfinite(val) or val <= 0.0:
                raise DomainError(f"{name} must be finite and > 0, got {val}")

    @property
    def surface_density(self) -> float:
        return self.total_mass / (4.0 * math.pi * self.radius * self.radius)


@dataclass(frozen=True)
class RingDecomposition:
    """Uniform partition of the polar angle [0, pi] into n_rings panels."""

    n_rings: int

    def __post_init__(self):
        if self.n_rings < 1:
            raise DomainError(f"need at least 1 ring, got {self.n_rings}")


def ring_area(a: float, theta: float, w: float) -> float:
    """Thin-ring surface area 2*pi*x*w, with x = a*sin(theta) the distance
    from the ring to the axis."""
    if a <= 0.0:
        raise DomainError(f"sphere radius must be > 0, got {a}")
    if not (0.0 <= theta <= math.pi):
        raise DomainError(f"polar angle must lie in [0, pi], got {theta}")
    if not (0.0 < w < a):
        raise DomainError(
            f"thin-ring approximation needs 0 < w < a, got w={w}, a={a}"
        )
    return 2.0 * math.pi * (a * math.sin(theta)) * w


def shell_accel(shell: ShellSpec, d: float, rings: RingDecomposition) -> float:
    """Axial attraction of the shell on an external point at distance d,
    summed over the ring decomposition with the midpoint rule."""
    a = shell.radius
    if d <= a:
        raise OutsideOnlyError(
            f"point must lie outside the shell: d={d:g} <= a={a:g}"
        )
    n = rings.n_rings
    dtheta = math.pi / n
    theta = (np.arange(n) + 0.5) * dtheta
    width = a * dtheta
    areas = 2.0 * math.pi * (a * np.sin(theta)) * width
    cos_t = np.cos(theta)
    s2 = d * d + a * a - 2.0 * a * d * cos_t
    s = np.sqrt(s2)
    axial = (d - a * cos_t) / s
    return float(np.sum(shell.g * shell.surface_density * areas / s2 * axial))


def sphere_accel(radius: float, total_mass: float, g: float, d: float,
                 n_shells: int, rings: RingDecomposition) -> float:
    """Attraction of a uniform solid ball, summed over concentric shells of
    equal thickness with exact shell-volume mass weights."""
    if radius <= 0.0 or total_mass <= 0.0 or g <= 0.0:
        raise DomainError("radius, total_mass, and g must all be > 0")
    if n_shells < 1:
        raise DomainError(f"need at least 1 shell, got {n_shells}")
    if d <= radius:
        raise OutsideOnlyError(
            f"point must lie outside the sphere: d={d:g} <= radius={radius:g}"
        )
    edges = np.linspace(0.0, radius, n_shells + 1)
    total = 0.0
    for r_in, r_out in zip(edges[:-1], edges[1:]):
        mass = total_mass * (r_out**3 - r_in**3) / radius**3
        mid = 0.5 * (r_in + r_out)
        total += shell_accel(ShellSpec(radius=mid, total_mass=mass, g=g), d, rings)
    return total


def point_mass_accel(gm: float, d: float) -> float:
    """Inverse-square point-mass attraction gM / d^2."""
    if d <= 0.0:
        raise DomainError(f"distance must be > 0, got {d}")
    return gm / (d * d)
