"""Dense multivector arithmetic for the real Clifford algebra Cl(n,0), 1 <= n <= 8.

Basis blades are indexed by bitmasks over the n generators: bit j set means
generator e_{j+1} is a factor of the blade, so mask 0 is the scalar and mask
2**n - 1 is the volume element.  A multivector is a dense float64 coefficient
vector of length 2**n.  Products are computed from precomputed Cayley tables:
the blade product e_A e_B lands on mask A ^ B with a sign given by the parity
of the transpositions needed to sort the concatenated generator lists
(repeated generators contract to +1, Euclidean signature).

All values are immutable after construction and every operation is a pure
function, so instances can be shared freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

MAX_DIM = 8

#: Default absolute tolerance for floating-point algebraic identities.
DEFAULT_TOL = 1e-12

#: Inputs declared "unit" are accepted if their norm is within this of 1,
#: then renormalized.
UNIT_TOL = 1e-9


def grade_of(mask: int) -> int:
    """Grade of a basis blade = number of generators in its mask."""
    return int(mask).bit_count()


def _reorder_sign(a: int, b: int) -> int:
    """Sign of e_A e_B from transposition counting.

    Each generator of B must move left past the strictly higher generators of
    A; the product sign is the parity of the total number of swaps.
    """
    a >>= 1
    swaps = 0
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


@lru_cache(maxsize=MAX_DIM + 1)
def _tables(dim: int):
    """Cayley tables for Cl(dim,0): result masks, signs, and per-blade grades."""
    size = 1 << dim
    masks = np.arange(size)
    xor = (masks[:, None] ^ masks[None, :]).astype(np.intp)
    sign = np.empty((size, size), dtype=np.int8)
    for i in range(size):
        for j in range(size):
            sign[i, j] = _reorder_sign(i, j)
    grades = np.array([grade_of(m) for m in range(size)], dtype=np.int8)
    return xor, sign, grades


@lru_cache(maxsize=MAX_DIM + 1)
def _wedge_sign(dim: int) -> np.ndarray:
    """Cayley signs restricted to disjoint blade pairs (grade-adding terms)."""
    xor, sign, _ = _tables(dim)
    size = 1 << dim
    masks = np.arange(size)
    disjoint = (masks[:, None] & masks[None, :]) == 0
    return np.where(disjoint, sign, 0).astype(np.int8)


@lru_cache(maxsize=MAX_DIM + 1)
def _contract_sign(dim: int) -> np.ndarray:
    """Cayley signs restricted to nested blade pairs (grade-|r-s| terms).

    A blade pair (A, B) contributes to the grade-|r-s| part of the geometric
    product exactly when one mask contains the other.
    """
    xor, sign, _ = _tables(dim)
    size = 1 << dim
    masks = np.arange(size)
    inter = masks[:, None] & masks[None, :]
    nested = (inter == masks[:, None]) | (inter == masks[None, :])
    return np.where(nested, sign, 0).astype(np.int8)


@lru_cache(maxsize=MAX_DIM + 1)
def _reversion_sign(dim: int) -> np.ndarray:
    """Per-blade reversion signs (-1)**(g(g-1)/2)."""
    _, _, grades = _tables(dim)
    g = grades.astype(np.int64)
    return np.where((g * (g - 1) // 2) % 2 == 0, 1.0, -1.0)


@dataclass(frozen=True)
class Multivector:
    """Element of Cl(dim,0) as a dense coefficient vector over 2**dim blades."""

    dim: int
    coeffs: np.ndarray

    def __post_init__(self):
        if not 1 <= self.dim <= MAX_DIM:
            raise ValueError(f"dim must be in 1..{MAX_DIM}, got {self.dim}")
        c = np.asarray(self.coeffs, dtype=np.float64)
        if c.shape != (1 << self.dim,):
            raise ValueError(
                f"coeffs must have length {1 << self.dim} for dim {self.dim}, "
                f"got shape {c.shape}"
            )
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        c = c.copy()
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(dim: int) -> "Multivector":
        return Multivector(dim, np.zeros(1 << dim))

    @staticmethod
    def scalar(dim: int, value: float) -> "Multivector":
        c = np.zeros(1 << dim)
        c[0] = value
        return Multivector(dim, c)

    @staticmethod
    def blade(dim: int, mask: int, coeff: float = 1.0) -> "Multivector":
        """Single canonical blade (generators in ascending index order)."""
        if not 0 <= mask < (1 << dim):
            raise ValueError(f"blade mask {mask} out of range for dim {dim}")
        c = np.zeros(1 << dim)
        c[mask] = coeff
        return Multivector(dim, c)

    @staticmethod
    def basis_vector(dim: int, index: int) -> "Multivector":
        """Generator e_index, 1-based."""
        if not 1 <= index <= dim:
            raise ValueError(f"generator index {index} out of range 1..{dim}")
        return Multivector.blade(dim, 1 << (index - 1))

    @staticmethod
    def from_vector(components, dim: int | None = None) -> "Multivector":
        """Grade-1 element with the given components on e_1..e_k."""
        v = np.asarray(components, dtype=np.float64)
        if v.ndim != 1:
            raise ValueError("vector components must be one-dimensional")
        if dim is None:
            dim = len(v)
        if len(v) > dim:
            raise ValueError(f"{len(v)} components do not fit in Cl({dim},0)")
        c = np.zeros(1 << dim)
        for j, x in enumerate(v):
            c[1 << j] = x
        return Multivector(dim, c)

    @staticmethod
    def volume(dim: int) -> "Multivector":
        """Volume element e_1 e_2 ... e_dim."""
        return Multivector.blade(dim, (1 << dim) - 1)

    # -- arithmetic sugar ----------------------------------------------------

    def __add__(self, other: "Multivector") -> "Multivector":
        _check_same_dim(self, other)
        return Multivector(self.dim, self.coeffs + other.coeffs)

    def __sub__(self, other: "Multivector") -> "Multivector":
        _check_same_dim(self, other)
        return Multivector(self.dim, self.coeffs - other.coeffs)

    def __neg__(self) -> "Multivector":
        return Multivector(self.dim, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        return Multivector(self.dim, self.coeffs * float(other))

    def __rmul__(self, other):
        return Multivector(self.dim, self.coeffs * float(other))

    def __str__(self) -> str:
        return render(self)

    # -- views ---------------------------------------------------------------

    def vector_components(self) -> np.ndarray:
        """Components on e_1..e_dim, as a plain array."""
        return np.array([self.coeffs[1 << j] for j in range(self.dim)])


def _check_same_dim(x: Multivector, y: Multivector) -> None:
    if x.dim != y.dim:
        raise ValueError(f"dimension mismatch: Cl({x.dim},0) vs Cl({y.dim},0)")


# -- core operations ---------------------------------------------------------


def geometric_product(x: Multivector, y: Multivector) -> Multivector:
    """Geometric product in Cl(n,0): e_j e_j = 1, e_j e_k = -e_k e_j for j != k."""
    _check_same_dim(x, y)
    xor, sign, _ = _tables(x.dim)
    terms = sign * np.outer(x.coeffs, y.coeffs)
    out = np.bincount(xor.ravel(), weights=terms.ravel(), minlength=1 << x.dim)
    return Multivector(x.dim, out)


def wedge(x: Multivector, y: Multivector) -> Multivector:
    """Outer product: the grade-(r+s) part of the geometric product on
    homogeneous arguments, extended bilinearly over grade pairs."""
    _check_same_dim(x, y)
    xor, _, _ = _tables(x.dim)
    terms = _wedge_sign(x.dim) * np.outer(x.coeffs, y.coeffs)
    out = np.bincount(xor.ravel(), weights=terms.ravel(), minlength=1 << x.dim)
    return Multivector(x.dim, out)


def contract(x: Multivector, y: Multivector) -> Multivector:
    """Grade-|r-s| part of the geometric product on homogeneous arguments,
    extended bilinearly over grade pairs.

    On two vectors this is the scalar inner product; on (trivector, vector)
    in Cl(3,0) it is the dual bivector of the vector.
    """
    _check_same_dim(x, y)
    xor, _, _ = _tables(x.dim)
    terms = _contract_sign(x.dim) * np.outer(x.coeffs, y.coeffs)
    out = np.bincount(xor.ravel(), weights=terms.ravel(), minlength=1 << x.dim)
    return Multivector(x.dim, out)


def grade_part(x: Multivector, g: int) -> Multivector:
    """Projection onto grade g (coefficients of all other grades zeroed)."""
    if not 0 <= g <= x.dim:
        raise ValueError(f"grade {g} out of range 0..{x.dim}")
    _, _, grades = _tables(x.dim)
    return Multivector(x.dim, np.where(grades == g, x.coeffs, 0.0))


def grade_norms(x: Multivector) -> dict[int, float]:
    """Euclidean coefficient norm of each grade component, g = 0..dim."""
    _, _, grades = _tables(x.dim)
    return {
        g: float(np.linalg.norm(x.coeffs[grades == g])) for g in range(x.dim + 1)
    }


def reversion(x: Multivector) -> Multivector:
    """Reversion: each grade-g blade picks up the sign (-1)**(g(g-1)/2)."""
    return Multivector(x.dim, x.coeffs * _reversion_sign(x.dim))


def norm(x: Multivector) -> float:
    """Euclidean norm of the coefficient vector."""
    return float(np.linalg.norm(x.coeffs))


def scalar_part(x: Multivector) -> float:
    return float(x.coeffs[0])


def rotor_exp(B: Multivector, angle: float, tol: float = DEFAULT_TOL) -> Multivector:
    """exp(B * angle) = cos(angle) + sin(angle) B for a unit bivector B.

    B must be pure grade 2 with B*B = -1 (both checked to `tol`); the closed
    form then follows from the exponential series.
    """
    if norm(B - grade_part(B, 2)) > tol:
        raise ValueError("rotor generator must be a pure bivector")
    square = geometric_product(B, B)
    if norm(square - Multivector.scalar(B.dim, -1.0)) > tol:
        raise ValueError("rotor generator must be a unit bivector (B*B = -1)")
    out = math.sin(angle) * B
    c = out.coeffs.copy()
    c[0] += math.cos(angle)
    return Multivector(B.dim, c)


# -- rendering ----------------------------------------------------------------


def blade_label(mask: int) -> str:
    """Canonical blade name: "1" for the scalar, else "e" + ascending indices."""
    if mask == 0:
        return "1"
    return "e" + "".join(str(j + 1) for j in range(MAX_DIM) if mask >> j & 1)


def render(x: Multivector, eps: float = 0.0) -> str:
    """Debug rendering, e.g. "1.0 + 2.0*e12 - 0.5*e13".

    Terms appear in blade-mask order; coefficients with |c| <= eps are
    dropped; the zero multivector renders as "0.0".
    """
    parts: list[str] = []
    for mask, c in enumerate(x.coeffs):
        if c == 0.0 or abs(c) <= eps:
            continue
        label = blade_label(mask)
        mag = repr(float(abs(c)))
        body = mag if mask == 0 else f"{mag}*{label}"
        if not parts:
            parts.append(body if c >= 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c >= 0 else f"- {body}")
    if not parts:
        return "0.0"
    return " ".join(parts)


# -- small vector helpers ------------------------------------------------------


def unit_vector(v, tol: float = UNIT_TOL) -> np.ndarray:
    """Validate that v has norm 1 within `tol` and return it renormalized."""
    v = np.asarray(v, dtype=np.float64)
    n = float(np.linalg.norm(v))
    if abs(n - 1.0) > tol:
        raise ValueError(f"expected a unit vector, got norm {n!r}")
    return v / n
