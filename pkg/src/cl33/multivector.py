"""Dense multivectors over the 64 basis blades and their products.

Every value is immutable; operations return fresh multivectors.  The default
numeric tolerance used throughout the package is ``ATOL + RTOL * scale`` with
``scale`` the largest coefficient magnitude involved, which absorbs rounding
only (the underlying identities are exact).
"""

from __future__ import annotations

import numbers

import numpy as np

from .blades import (
    BLADE_COUNT,
    CONJUGATION_SIGNS,
    GRADE_SELECTORS,
    GRADES,
    INVOLUTION_SIGNS,
    OUTER_SIGNS,
    PRODUCT_MASKS,
    PRODUCT_SIGNS,
    REVERSION_SIGNS,
    blade_name,
)
from .errors import ConvergenceError, DomainError

ATOL = 1e-12
RTOL = 1e-9

_FLAT_MASKS = PRODUCT_MASKS.ravel()


def tolerance(scale: float) -> float:
    """Absolute tolerance appropriate for values of the given magnitude."""
    return ATOL + RTOL * abs(scale)


class Multivector:
    """A dense element of the algebra: 64 float64 coefficients by blade mask."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            arr = np.zeros(BLADE_COUNT)
        else:
            arr = np.array(coeffs, dtype=np.float64, copy=True).reshape(BLADE_COUNT)
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def scalar(cls, value):
        c = np.zeros(BLADE_COUNT)
        c[0] = value
        return cls(c)

    @classmethod
    def blade(cls, mask, coeff=1.0):
        if not 0 <= mask < BLADE_COUNT:
            raise ValueError(f"blade mask out of range: {mask}")
        c = np.zeros(BLADE_COUNT)
        c[mask] = coeff
        return cls(c)

    @classmethod
    def _raw(cls, arr):
        """Adopt a freshly computed array without copying."""
        mv = cls.__new__(cls)
        arr = np.asarray(arr, dtype=np.float64).reshape(BLADE_COUNT)
        arr.setflags(write=False)
        object.__setattr__(mv, "coeffs", arr)
        return mv

    # -- inspection ----------------------------------------------------

    @property
    def scalar_part(self) -> float:
        return float(self.coeffs[0])

    def coeff(self, mask: int) -> float:
        return float(self.coeffs[mask])

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.coeffs)))

    def grades_present(self, tol=0.0):
        return sorted({int(k) for k in GRADES[np.abs(self.coeffs) > tol]})

    def grade(self, k: int) -> "Multivector":
        """Projection onto grade ``k`` (coefficients of every other grade zeroed)."""
        if not isinstance(k, numbers.Integral) or not 0 <= k <= 6:
            raise DomainError(f"grade must be an integer in 0..6, got {k!r}")
        return Multivector._raw(np.where(GRADE_SELECTORS[int(k)], self.coeffs, 0.0))

    def is_homogeneous(self, k: int, tol=0.0) -> bool:
        return bool(np.all(np.abs(self.coeffs[~GRADE_SELECTORS[k]]) <= tol))

    # -- ring structure -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Multivector):
            return Multivector._raw(self.coeffs + other.coeffs)
        if isinstance(other, numbers.Real):
            c = self.coeffs.copy()
            c[0] += other
            return Multivector._raw(c)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Multivector):
            return Multivector._raw(self.coeffs - other.coeffs)
        if isinstance(other, numbers.Real):
            c = self.coeffs.copy()
            c[0] -= other
            return Multivector._raw(c)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, numbers.Real):
            c = -self.coeffs
            c[0] += other
            return Multivector._raw(c)
        return NotImplemented

    def __neg__(self):
        return Multivector._raw(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            prod = (self.coeffs[:, None] * other.coeffs[None, :]) * PRODUCT_SIGNS
            return Multivector._raw(np.bincount(_FLAT_MASKS, weights=prod.ravel(),
                                                minlength=BLADE_COUNT))
        if isinstance(other, numbers.Real):
            return Multivector._raw(self.coeffs * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return Multivector._raw(self.coeffs * other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Real):
            return Multivector._raw(self.coeffs / other)
        return NotImplemented

    def __xor__(self, other):
        """Exterior product (grade-raising part of the geometric product)."""
        if isinstance(other, Multivector):
            prod = (self.coeffs[:, None] * other.coeffs[None, :]) * OUTER_SIGNS
            return Multivector._raw(np.bincount(_FLAT_MASKS, weights=prod.ravel(),
                                                minlength=BLADE_COUNT))
        return NotImplemented

    def __invert__(self):
        """Reversion."""
        return Multivector._raw(self.coeffs * REVERSION_SIGNS)

    # -- comparison ------------------------------------------------------

    def approx_eq(self, other, atol=ATOL, rtol=RTOL) -> bool:
        """Per-coefficient closeness: |a-b| <= atol + rtol*max(|a|, |b|)."""
        if isinstance(other, numbers.Real):
            other = Multivector.scalar(other)
        a, b = self.coeffs, other.coeffs
        return bool(np.all(np.abs(a - b) <= atol + rtol * np.maximum(np.abs(a), np.abs(b))))

    def is_zero(self, tol=ATOL) -> bool:
        return bool(np.all(np.abs(self.coeffs) <= tol))

    def __repr__(self):
        terms = []
        for mask in range(BLADE_COUNT):
            c = self.coeffs[mask]
            if c != 0.0:
                terms.append(f"{c:g}*{blade_name(mask)}" if mask else f"{c:g}")
        if not terms:
            return "Multivector(0)"
        return "Multivector(" + " + ".join(terms) + ")"


#: The six generators as multivectors, indexed by bit position.
GENERATORS = tuple(Multivector.blade(1 << i) for i in range(6))

ONE = Multivector.scalar(1.0)
ZERO = Multivector()


def _as_mv(x):
    if isinstance(x, Multivector):
        return x
    if isinstance(x, numbers.Real):
        return Multivector.scalar(x)
    raise TypeError(f"expected Multivector or real scalar, got {type(x).__name__}")


def geometric_product(a, b) -> Multivector:
    return _as_mv(a) * _as_mv(b)


def outer_product(a, b) -> Multivector:
    """Exterior product, extended to mixed-grade inputs as the sum of the
    grade-(r+s) parts of the products of the grade parts."""
    return _as_mv(a) ^ _as_mv(b)


def grade_project(a, k: int) -> Multivector:
    return _as_mv(a).grade(k)


def grade_involution(a) -> Multivector:
    return Multivector._raw(_as_mv(a).coeffs * INVOLUTION_SIGNS)


def reversion(a) -> Multivector:
    return Multivector._raw(_as_mv(a).coeffs * REVERSION_SIGNS)


def conjugation(a) -> Multivector:
    return Multivector._raw(_as_mv(a).coeffs * CONJUGATION_SIGNS)


def vector_contract(v, a) -> Multivector:
    """Interior product of a grade-1 element into ``a``.

    For homogeneous ``a`` of grade k this is (v a - (-1)^k a v) / 2, the
    grade-(k-1) part of the product; mixed grades extend by linearity.
    """
    v = _as_mv(v)
    a = _as_mv(a)
    if not v.is_homogeneous(1, tol=tolerance(v.max_abs())):
        raise DomainError("contraction requires a grade-1 left factor")
    return (v * a - grade_involution(a) * v) * 0.5


def exponential(a, tol=1e-14, max_terms=128) -> Multivector:
    """Series exponential sum(a^n / n!), truncated when the next term is
    below ``tol`` relative to the largest partial-sum coefficient.

    Raises ConvergenceError when ``max_terms`` terms do not reach the
    tolerance.
    """
    a = _as_mv(a)
    total = ONE
    term = ONE
    for n in range(1, max_terms + 1):
        term = term * a / n
        total = total + term
        if term.max_abs() <= tol * max(1.0, total.max_abs()):
            return total
    raise ConvergenceError(
        f"exponential series did not converge within {max_terms} terms "
        f"(last term magnitude {term.max_abs():.3e})")
