"""The Euclidean model inside the algebra.

A 3-vector v embeds as v = (v+ + v-)/2, where v+ and v- are the copies of v
over the plus and minus generator sectors; the matching covector is
v* = (v+ - v-)/2.  Embedded vectors are null (v^2 = 0) and satisfy
v v* + v* v = |v|^2.  A point with weight w at position p is the paravector
w + p.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .blades import GRADES
from .errors import CovectorResidue, NonParavectorResidue
from .multivector import ATOL, RTOL, GENERATORS, Multivector, tolerance

_HIGH_GRADE = GRADES >= 2

_EP = GENERATORS[:3]
_EM = GENERATORS[3:]


def _vec3(v) -> np.ndarray:
    arr = np.asarray(v, dtype=np.float64).reshape(3)
    return arr


def sector_vector(v, sector: int) -> Multivector:
    """The copy of the 3-vector over one generator sector: v+ or v-."""
    v = _vec3(v)
    gens = _EP if sector > 0 else _EM
    return v[0] * gens[0] + v[1] * gens[1] + v[2] * gens[2]


def embed_vector(v) -> Multivector:
    """v = (v+ + v-)/2; squares to zero."""
    return 0.5 * (sector_vector(v, +1) + sector_vector(v, -1))


def embed_covector(v) -> Multivector:
    """v* = (v+ - v-)/2."""
    return 0.5 * (sector_vector(v, +1) - sector_vector(v, -1))


#: Embedded basis vectors e_i and covectors e_i*.
E = tuple(embed_vector(np.eye(3)[i]) for i in range(3))
E_STAR = tuple(embed_covector(np.eye(3)[i]) for i in range(3))

#: Sector pseudoscalars and the full volume element.
I_PLUS = _EP[0] * _EP[1] * _EP[2]
I_MINUS = _EM[0] * _EM[1] * _EM[2]
I_FULL = I_PLUS * I_MINUS

#: Euclidean volume trivector e1 e2 e3 (equal to the signed sector sum / 8).
OMEGA_V = E[0] * E[1] * E[2]

_I_PLUS_INV = -I_PLUS  # (I+)^2 = -1


def star_conjugate(a: Multivector) -> Multivector:
    """Conjugation by the plus-sector pseudoscalar: A -> I+ A (I+)^-1.

    Sends embedded vectors to their covectors and vice versa (up to sign);
    defined for arbitrary multivectors.
    """
    return I_PLUS * a * _I_PLUS_INV


@dataclass(frozen=True)
class Paravector:
    """A weighted point: weight w plus position 3-vector p.

    Affine points have w = 1.  A weight-0 paravector is the point at infinity
    in the direction of its vector part.  Negative weights flip orientation:
    the location of (w, p) is p/w for w > 0 and p/|w| for w < 0.
    """

    weight: float
    vector: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        object.__setattr__(self, "weight", float(self.weight))
        object.__setattr__(self, "vector", _vec3(self.vector))

    def __sub__(self, other: "Paravector") -> "Paravector":
        return Paravector(self.weight - other.weight, self.vector - other.vector)

    @property
    def is_at_infinity(self) -> bool:
        return abs(self.weight) <= tolerance(float(np.max(np.abs(self.vector), initial=0.0)))

    def location(self) -> np.ndarray:
        """Represented position: p/w for w > 0, p/|w| for w < 0."""
        if self.is_at_infinity:
            raise ZeroDivisionError("point at infinity has no finite location")
        return self.vector / abs(self.weight)

    def approx_eq(self, other: "Paravector", atol=ATOL, rtol=RTOL) -> bool:
        a = np.concatenate(([self.weight], self.vector))
        b = np.concatenate(([other.weight], other.vector))
        return bool(np.all(np.abs(a - b) <= atol + rtol * np.maximum(np.abs(a), np.abs(b))))

    def __repr__(self):
        x, y, z = self.vector
        return f"Paravector(w={self.weight:g}, p=({x:g}, {y:g}, {z:g}))"


def paravector_sub(p: Paravector, q: Paravector) -> Paravector:
    return p - q


def embed_paravector(p: Paravector) -> Multivector:
    """w + embedded vector."""
    return p.weight + embed_vector(p.vector)


def extract_paravector(a: Multivector, atol=ATOL, rtol=RTOL) -> Paravector:
    """Read a weighted point back out of a multivector.

    The weight is the scalar part and p_i is twice the e_i+ coefficient.
    Raises NonParavectorResidue when any grade >= 2 coefficient exceeds the
    tolerance, and CovectorResidue when the e_i+ and e_i- coefficients
    disagree (the vector part then contains a covector component).
    """
    tol = atol + rtol * a.max_abs()
    worst = float(np.max(np.abs(a.coeffs[_HIGH_GRADE]), initial=0.0))
    if worst > tol:
        raise NonParavectorResidue(
            f"grade >= 2 residue {worst:.3e} exceeds tolerance {tol:.3e}", residual=worst)
    plus = a.coeffs[[1, 2, 4]]     # e1p, e2p, e3p
    minus = a.coeffs[[8, 16, 32]]  # e1m, e2m, e3m
    mismatch = float(np.max(np.abs(plus - minus), initial=0.0))
    if mismatch > tol:
        raise CovectorResidue(
            f"covector residue {mismatch:.3e} exceeds tolerance {tol:.3e}", residual=mismatch)
    return Paravector(a.coeffs[0], 2.0 * plus)


def normalize_point(p: Paravector) -> Paravector:
    """Rescale to unit |weight|, preserving orientation.

    (w, p) becomes (sign(w), p/|w|); weight-0 inputs (points at infinity)
    are returned unchanged.
    """
    if p.is_at_infinity:
        return p
    s = 1.0 if p.weight > 0 else -1.0
    return Paravector(s, p.vector / abs(p.weight))


def g(u, v) -> float:
    """Euclidean metric on coordinate 3-vectors."""
    return float(np.dot(_vec3(u), _vec3(v)))
