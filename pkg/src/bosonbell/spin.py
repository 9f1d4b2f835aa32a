"""Spin-1 operators, their spectral projectors, and the vector-to-spin basis map."""

from __future__ import annotations

import numpy as np

from .directions import Direction

_SQRT2 = np.sqrt(2.0)

S1 = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=complex) / _SQRT2
S2 = np.array([[0, -1, 0], [1, 0, -1], [0, 1, 0]], dtype=complex) * (1j / _SQRT2)
S3 = np.diag([1.0, 0.0, -1.0]).astype(complex)

# Unitary intertwiner between Cartesian vector components and spin-1
# projection components (+1, 0, -1): a spatial rotation R acts on spin
# states as V R V^dagger.
V = np.array(
    [
        [-1.0, 1.0j, 0.0],
        [0.0, 0.0, _SQRT2],
        [1.0, 1.0j, 0.0],
    ],
    dtype=complex,
) / _SQRT2

for _m in (S1, S2, S3, V):
    _m.setflags(write=False)
del _m


def spin_matrices() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The three spin-1 generators in the (+1, 0, -1) projection basis."""
    return S1, S2, S3


def spin_component(omega: Direction) -> np.ndarray:
    """Spin operator projected on a direction; Hermitian with eigenvalues +1, 0, -1."""
    return omega.ux * S1 + omega.uy * S2 + omega.uz * S3


def spin_projectors(omega: Direction) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Spectral projectors (plus, minus, zero) of the projected spin operator.

    Built from the operator polynomial: the +/-1 projectors are
    (s^2 +/- s) / 2 and the 0 projector is 1 - s^2, which is exactly the
    spectral decomposition because s has eigenvalues {+1, 0, -1}.
    """
    s = spin_component(omega)
    s2 = s @ s
    plus = 0.5 * (s2 + s)
    minus = 0.5 * (s2 - s)
    zero = np.eye(3, dtype=complex) - s2
    return plus, minus, zero


def spin_basis_matrix() -> np.ndarray:
    """The unitary map V from Cartesian to spin-projection components."""
    return V
