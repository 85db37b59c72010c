"""Minimal 2D vector type used for positions and velocities."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class PlanarVector:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f"vector components must be finite, got ({self.x}, {self.y})")

    def __add__(self, other: "PlanarVector") -> "PlanarVector":
        return PlanarVector(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "PlanarVector") -> "PlanarVector":
        return PlanarVector(self.x - other.x, self.y - other.y)

    def __mul__(self, s: float) -> "PlanarVector":
        return PlanarVector(self.x * s, self.y * s)

    __rmul__ = __mul__

    def dot(self, other: "PlanarVector") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "PlanarVector") -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def unit(self) -> "PlanarVector":
        n = self.norm()
        if n == 0.0:
            raise DomainError("cannot normalize the zero vector")
        return PlanarVector(self.x / n, self.y / n)
