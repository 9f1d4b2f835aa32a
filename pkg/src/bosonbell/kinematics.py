"""Minkowski four-vectors and center-of-mass pair kinematics.

Natural units (hbar = c = 1) and metric signature (+, -, -, -) throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .directions import Direction

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
METRIC.setflags(write=False)


@dataclass(frozen=True)
class FourVector:
    """Contravariant four-vector (t, x, y, z)."""

    t: float
    x: float
    y: float
    z: float

    @property
    def spatial(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def as_array(self) -> np.ndarray:
        return np.array([self.t, self.x, self.y, self.z])

    def lowered(self) -> np.ndarray:
        """Covariant components (index lowered with the metric)."""
        return np.array([self.t, -self.x, -self.y, -self.z])


def minkowski_dot(u: FourVector, v: FourVector) -> float:
    return u.t * v.t - u.x * v.x - u.y * v.y - u.z * v.z


def momentum_from_x(x: float, n: Direction, m: float = 1.0) -> FourVector:
    """On-shell momentum with squared momentum-to-mass ratio x along n.

    The spatial part is m*sqrt(x)*n and the energy m*sqrt(1 + x), so the
    mass-shell relation holds by construction.
    """
    if x < 0:
        raise ValueError(f"boost parameter x must be >= 0, got {x}")
    if m <= 0:
        raise ValueError(f"mass must be positive, got {m}")
    q = m * math.sqrt(x)
    return FourVector(m * math.sqrt(1.0 + x), q * n.ux, q * n.uy, q * n.uz)


def parity_partner(k: FourVector) -> FourVector:
    """Same energy, reversed spatial momentum: the partner's momentum in the
    center-of-mass frame."""
    return FourVector(k.t, -k.x, -k.y, -k.z)
