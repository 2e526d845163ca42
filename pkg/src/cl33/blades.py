"""Basis-blade arithmetic for the 64-dimensional algebra with signature (3, 3).

A basis blade is a 6-bit mask.  Bits 0..2 select the generators that square
to +1 (printed ``e1p``, ``e2p``, ``e3p``); bits 3..5 select the generators
that square to -1 (``e1m``, ``e2m``, ``e3m``).  Factors are kept in ascending
bit order, so a mask alone identifies a blade, and the product of two blades
is the XOR of their masks times a sign.
"""

from __future__ import annotations

import numpy as np

GENERATOR_COUNT = 6
BLADE_COUNT = 64

#: Squares of the six generators, indexed by bit position.
SQUARES = (1, 1, 1, -1, -1, -1)


def grade(mask: int) -> int:
    """Number of generator factors in the blade."""
    if not 0 <= mask < BLADE_COUNT:
        raise ValueError(f"blade mask out of range: {mask}")
    return int(mask).bit_count()


def blade_factors(mask: int) -> tuple[int, ...]:
    """Bit positions of the generators present in the blade, ascending."""
    return tuple(i for i in range(GENERATOR_COUNT) if mask >> i & 1)


def blade_name(mask: int) -> str:
    if mask == 0:
        return "1"
    parts = [f"e{i % 3 + 1}{'p' if i < 3 else 'm'}" for i in blade_factors(mask)]
    return "*".join(parts)


def blade_geometric_product(a: int, b: int) -> tuple[int, int]:
    """Geometric product of two basis blades.

    Returns ``(sign, mask)`` with ``mask = a XOR b``.  The sign counts the
    transpositions needed to merge the two ascending factor lists, then picks
    up one generator square for every factor the blades share.
    """
    if not 0 <= a < BLADE_COUNT or not 0 <= b < BLADE_COUNT:
        raise ValueError(f"blade mask out of range: {a}, {b}")
    swaps = 0
    x = a >> 1
    while x:
        swaps += (x & b).bit_count()
        x >>= 1
    sign = -1 if swaps & 1 else 1
    for i in blade_factors(a & b):
        sign *= SQUARES[i]
    return sign, a ^ b


def _sign_table(per_grade):
    return np.array([per_grade(grade(m)) for m in range(BLADE_COUNT)], dtype=np.float64)


#: Grade of each blade mask.
GRADES = np.array([grade(m) for m in range(BLADE_COUNT)], dtype=np.int64)

#: Boolean mask selecting the coefficients of each grade.
GRADE_SELECTORS = {k: GRADES == k for k in range(GENERATOR_COUNT + 1)}

#: Per-blade signs of the three involutions.
INVOLUTION_SIGNS = _sign_table(lambda k: (-1) ** k)
REVERSION_SIGNS = _sign_table(lambda k: (-1) ** (k * (k - 1) // 2))
CONJUGATION_SIGNS = INVOLUTION_SIGNS * REVERSION_SIGNS

_signs = np.empty((BLADE_COUNT, BLADE_COUNT), dtype=np.float64)
_masks = np.empty((BLADE_COUNT, BLADE_COUNT), dtype=np.int64)
for _a in range(BLADE_COUNT):
    for _b in range(BLADE_COUNT):
        _s, _m = blade_geometric_product(_a, _b)
        _signs[_a, _b] = _s
        _masks[_a, _b] = _m

#: Cayley tables: sign and result mask of every blade pair.
PRODUCT_SIGNS = _signs
PRODUCT_MASKS = _masks

#: Signs restricted to disjoint blade pairs (the grade-raising part of the
#: product, i.e. the exterior product on blades).
OUTER_SIGNS = np.where((np.arange(BLADE_COUNT)[:, None] & np.arange(BLADE_COUNT)[None, :]) == 0,
                       PRODUCT_SIGNS, 0.0)

del _signs, _masks, _a, _b, _s, _m
