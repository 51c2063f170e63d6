"""Handed bivector frames and the orientation-parameterized subalgebra.

An orientation is a sign lam in {+1, -1}.  It selects one of two bivector
frames in Cl(3,0): beta_j = lam * (I . e_j), where I = e1 e2 e3 is the fixed
right-handed volume element.  Both frames satisfy beta_j^2 = -1 and pairwise
anticommutation; they are told apart by the ordered product beta_1 beta_2
beta_3 = lam and by the sign of the epsilon term in their subalgebra

    beta_j beta_k = -delta_jk - lam * eps_jkl beta_l.

The same subalgebra is also realized abstractly on the formal span
{1, beta_x, beta_y, beta_z} with lam entering only through the structure
constants (`AbstractElement`).  The two representations are kept in lockstep:
every single-orientation product can be cross-checked against its embedded
realization, while products that treat lam as a live parameter (the combined
identity, the trial averages) are computed abstractly.  Elements of opposite
orientation never combine; attempting to mix them raises
`OrientationMixError`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .multivector import (
    Multivector,
    contract,
    geometric_product,
    norm,
    unit_vector,
    wedge,
)

ORIENTATIONS = (1, -1)


class OrientationMixError(ValueError):
    """Raised when elements carrying different orientations are combined."""


def check_orientation(lam: int) -> int:
    if lam not in ORIENTATIONS:
        raise ValueError(f"orientation must be +1 or -1, got {lam!r}")
    return int(lam)


def volume3() -> Multivector:
    """The fixed right-handed volume element I = e1 e2 e3 of Cl(3,0)."""
    return Multivector.volume(3)


def vector3(v) -> Multivector:
    return Multivector.from_vector(np.asarray(v, dtype=np.float64), dim=3)


def cross(a, b) -> np.ndarray:
    return np.cross(np.asarray(a, dtype=np.float64), np.asarray(b, dtype=np.float64))


@dataclass(frozen=True)
class OrientedFrame:
    """The three basis bivectors of one orientation, embedded in Cl(3,0)."""

    lam: int
    beta: tuple[Multivector, Multivector, Multivector]

    def ordered_product(self) -> Multivector:
        bx, by, bz = self.beta
        return geometric_product(geometric_product(bx, by), bz)


def build_frame(lam: int) -> OrientedFrame:
    """Frame beta_j = lam * (I . e_j); its ordered product equals lam exactly."""
    lam = check_orientation(lam)
    I = volume3()
    beta = tuple(
        float(lam) * contract(I, Multivector.basis_vector(3, j)) for j in (1, 2, 3)
    )
    return OrientedFrame(lam, beta)


@dataclass(frozen=True)
class AbstractElement:
    """Element c0 + c1 beta_x + c2 beta_y + c3 beta_z of one orientation's
    formal quaternion-like algebra."""

    c0: float
    c: tuple[float, float, float]
    lam: int

    def __post_init__(self):
        check_orientation(self.lam)
        vals = (self.c0, *self.c)
        if not all(np.isfinite(vals)):
            raise ValueError("coefficients must be finite")

    @property
    def coeffs(self) -> np.ndarray:
        """Coefficient 4-vector over the formal basis {1, beta_x, beta_y, beta_z}."""
        return np.array([self.c0, *self.c])

    @staticmethod
    def scalar(value: float, lam: int) -> "AbstractElement":
        return AbstractElement(float(value), (0.0, 0.0, 0.0), lam)


def _structure_product(x: AbstractElement, y: AbstractElement, eps_sign: float) -> AbstractElement:
    """Bilinear product from 1 central and beta_j beta_k = -delta_jk
    + eps_sign * lam * eps_jkl beta_l.  The model's subalgebra is eps_sign
    = -1; the +1 variant exists only as a mutation canary for the identity
    suite."""
    if x.lam != y.lam:
        raise OrientationMixError(
            "cannot multiply elements of opposite orientation; the two handed "
            "subalgebras never combine"
        )
    lam = x.lam
    x1, x2, x3 = x.c
    y1, y2, y3 = y.c
    c0 = x.c0 * y.c0 - (x1 * y1 + x2 * y2 + x3 * y3)
    s = eps_sign * lam
    c = (
        x.c0 * y1 + y.c0 * x1 + s * (x2 * y3 - x3 * y2),
        x.c0 * y2 + y.c0 * x2 + s * (x3 * y1 - x1 * y3),
        x.c0 * y3 + y.c0 * x3 + s * (x1 * y2 - x2 * y1),
    )
    return AbstractElement(c0, c, lam)


def abstract_product(x: AbstractElement, y: AbstractElement) -> AbstractElement:
    """Product in the orientation's formal algebra,
    beta_j beta_k = -delta_jk - lam * eps_jkl beta_l."""
    return _structure_product(x, y, eps_sign=-1.0)


def standard_score(n_vec, lam: int) -> AbstractElement:
    """Bivector-valued standardized variable for direction n: lam * n_j beta_j.

    Requires a unit vector (renormalized within 1e-9); its abstract square is
    the scalar -1, making it a unit bivector about n.
    """
    lam = check_orientation(lam)
    n = unit_vector(n_vec)
    return AbstractElement(0.0, (lam * n[0], lam * n[1], lam * n[2]), lam)


def abstract_to_embedded(x: AbstractElement, frame: OrientedFrame) -> Multivector:
    """Realize an abstract element in Cl(3,0) through the given frame."""
    if x.lam != frame.lam:
        raise OrientationMixError("element and frame carry different orientations")
    out = Multivector.scalar(3, x.c0)
    for cj, bj in zip(x.c, frame.beta):
        out = out + cj * bj
    return out


def duality_check(a, b, lam: int) -> float:
    """Residual of the orientation's duality relation, evaluated in Cl(3,0)
    with the orientation's own trivector lam * I:

        || a ^ b  -  lam * ((lam I) . (a x b)) ||
    """
    lam = check_orientation(lam)
    a = unit_vector(a)
    b = unit_vector(b)
    lhs = wedge(vector3(a), vector3(b))
    mu = float(lam) * volume3()
    rhs = float(lam) * contract(mu, vector3(cross(a, b)))
    return norm(lhs - rhs)


def combined_identity_check(a, b, lam: int) -> float:
    """Coefficient residual of (mu.a)(mu.b) = -a.b - mu.(a x b) in the
    abstract representation, where mu.v carries coefficients lam * v_j."""
    lam = check_orientation(lam)
    a = unit_vector(a)
    b = unit_vector(b)
    lhs = abstract_product(standard_score(a, lam), standard_score(b, lam))
    axb = cross(a, b)
    rhs = AbstractElement(
        -float(np.dot(a, b)),
        (-lam * axb[0], -lam * axb[1], -lam * axb[2]),
        lam,
    )
    return float(np.linalg.norm(lhs.coeffs - rhs.coeffs))


@dataclass(frozen=True)
class HiddenBasis:
    """The eight Cl(3,0) basis elements with the volume element scaled by lam."""

    lam: int
    blades: tuple[Multivector, ...]

    def volume_element(self) -> Multivector:
        return self.blades[-1]


def hidden_basis(lam: int) -> HiddenBasis:
    """Basis {1, e_x, e_y, e_z, e_x^e_y, e_y^e_z, e_z^e_x, lam * e_x e_y e_z}."""
    lam = check_orientation(lam)
    ex, ey, ez = (Multivector.basis_vector(3, j) for j in (1, 2, 3))
    blades = (
        Multivector.scalar(3, 1.0),
        ex,
        ey,
        ez,
        wedge(ex, ey),
        wedge(ey, ez),
        wedge(ez, ex),
        float(lam) * volume3(),
    )
    return HiddenBasis(lam, blades)
