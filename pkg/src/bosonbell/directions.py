"""Unit directions on the sphere, parameterized by polar angles."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Direction:
    """A unit vector given by polar angles.

    The convention is (cos(phi) sin(theta), sin(phi) sin(theta), cos(theta)).
    Angles outside theta in [0, pi], phi in [0, 2*pi) are folded back onto
    the canonical ranges without changing the vector they describe.
    """

    theta: float
    phi: float
    ux: float = field(init=False, repr=False, compare=False)
    uy: float = field(init=False, repr=False, compare=False)
    uz: float = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        theta = float(self.theta)
        phi = float(self.phi)
        if not (math.isfinite(theta) and math.isfinite(phi)):
            raise ValueError("direction angles must be finite")
        st = math.sin(theta)
        ux = math.cos(phi) * st
        uy = math.sin(phi) * st
        uz = math.cos(theta)
        if not (0.0 <= theta <= math.pi and 0.0 <= phi < TWO_PI):
            theta = math.acos(min(1.0, max(-1.0, uz)))
            phi = math.atan2(uy, ux) % TWO_PI
            if phi >= TWO_PI:
                phi = 0.0
            st = math.sin(theta)
            ux = math.cos(phi) * st
            uy = math.sin(phi) * st
            uz = math.cos(theta)
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "ux", ux)
        object.__setattr__(self, "uy", uy)
        object.__setattr__(self, "uz", uz)

    @classmethod
    def from_vector(cls, v) -> "Direction":
        vx, vy, vz = float(v[0]), float(v[1]), float(v[2])
        r = math.sqrt(vx * vx + vy * vy + vz * vz)
        if r < 1e-300:
            raise ValueError("cannot build a direction from the zero vector")
        theta = math.acos(min(1.0, max(-1.0, vz / r)))
        phi = math.atan2(vy, vx) % TWO_PI
        if phi >= TWO_PI:
            phi = 0.0
        return cls(theta, phi)

    @property
    def unit(self) -> np.ndarray:
        return np.array([self.ux, self.uy, self.uz])

    def opposite(self) -> "Direction":
        """The antipodal direction."""
        return Direction.from_vector((-self.ux, -self.uy, -self.uz))


def dot(a: Direction, b: Direction) -> float:
    """Euclidean dot product of two unit directions."""
    return a.ux * b.ux + a.uy * b.uy + a.uz * b.uz


XHAT = Direction(math.pi / 2, 0.0)
YHAT = Direction(math.pi / 2, math.pi / 2)
ZHAT = Direction(0.0, 0.0)
